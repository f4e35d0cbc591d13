#include <doctest.h>

#include <stdexcept>

#include "exgr/fixtures.hpp"
#include "exgr/orbits.hpp"
#include "test_helpers.hpp"

using namespace exgr;
using exgr::testing::e;
using exgr::testing::random_mv;

TEST_CASE("hitchin data on the normal forms") {
  const HitchinData dec = hitchin(fixtures::normal_form(OrbitLabel::O10));
  CHECK(dec.k.is_zero());
  CHECK(dec.lambda.is_zero());

  const HitchinData split = hitchin(fixtures::normal_form(OrbitLabel::O0));
  CHECK(!split.lambda.is_zero());
  // direct expansion gives a diagonal matrix with entries +-1
  Matrix expected(6, 6);
  for (int i = 0; i < 6; ++i) expected.at(i, i) = Rat(i < 3 ? 1 : -1);
  CHECK(split.k == expected);
  CHECK(split.lambda == Rat(1));

  const HitchinData tangent = hitchin(fixtures::normal_form(OrbitLabel::O1));
  CHECK(!tangent.k.is_zero());
  CHECK((tangent.k * tangent.k).is_zero());
  CHECK(tangent.lambda.is_zero());

  const HitchinData o5 = hitchin(fixtures::normal_form(OrbitLabel::O5));
  CHECK(!o5.k.is_zero());
  CHECK(o5.lambda.is_zero());

  CHECK_THROWS_AS(hitchin(e(6, {1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(hitchin(e(5, {1, 2, 3})), std::invalid_argument);
}

TEST_CASE("hitchin square identity holds for arbitrary 3-forms") {
  Lcg64 rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    const Multivector w = random_mv(rng, 6, 3);
    if (w.is_zero()) continue;
    const HitchinData h = hitchin(w);  // throws internally if k^2 is not scalar
    CHECK(h.k * h.k == h.lambda * Matrix::identity(6));
  }
}

TEST_CASE("classification of the four normal forms") {
  CHECK(classify_orbit(fixtures::normal_form(OrbitLabel::O0)).label == OrbitLabel::O0);
  CHECK(classify_orbit(fixtures::normal_form(OrbitLabel::O1)).label == OrbitLabel::O1);
  CHECK(classify_orbit(fixtures::normal_form(OrbitLabel::O5)).label == OrbitLabel::O5);
  CHECK(classify_orbit(fixtures::normal_form(OrbitLabel::O10)).label ==
        OrbitLabel::O10);
  CHECK_THROWS_AS(classify_orbit(Multivector(6, 3)), std::invalid_argument);
}

TEST_CASE("classification is invariant under the group action") {
  Lcg64 rng(107);
  for (OrbitLabel label :
       {OrbitLabel::O0, OrbitLabel::O1, OrbitLabel::O5, OrbitLabel::O10}) {
    const Multivector w = fixtures::normal_form(label);
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix g = fixtures::random_gl(rng, 6);
      CHECK(classify_orbit(apply_gl(g, w)).label == label);
    }
  }
}

TEST_CASE("hitchin vanishes exactly on decomposable forms") {
  Lcg64 rng(109);
  for (OrbitLabel label :
       {OrbitLabel::O0, OrbitLabel::O1, OrbitLabel::O5, OrbitLabel::O10}) {
    const Multivector w = fixtures::normal_form(label);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix g = fixtures::random_gl(rng, 6);
      const Multivector gw = apply_gl(g, w);
      CHECK(hitchin(gw).k.is_zero() == (label == OrbitLabel::O10));
    }
  }
}

TEST_CASE("O5 decomposition of the normal form") {
  const O5Data data = o5_decompose(fixtures::normal_form(OrbitLabel::O5));
  CHECK(data.alpha == Subspace::span_of({{Rat(1), 0, 0, 0, 0, 0}}));
  CHECK(data.hyperplane.dim() == 5);
  CHECK(data.hyperplane ==
        Subspace(6, Matrix::from_rows({{Rat(1), 0, 0, 0, 0, 0},
                                       {0, Rat(1), 0, 0, 0, 0},
                                       {0, 0, Rat(1), 0, 0, 0},
                                       {0, 0, 0, Rat(1), 0, 0},
                                       {0, 0, 0, 0, Rat(1), 0}})));
  CHECK(data.sigma == e(6, {2, 3}) + e(6, {4, 5}));
  // identical form written differently
  CHECK(o5_decompose(e(6, {1, 2, 3}) + e(6, {1, 4, 5})).sigma == data.sigma);
  CHECK_THROWS_AS(o5_decompose(fixtures::normal_form(OrbitLabel::O0)),
                  std::domain_error);
}

TEST_CASE("O5 decomposition is equivariant and reconstructs the form") {
  Lcg64 rng(113);
  const Multivector w5 = fixtures::normal_form(OrbitLabel::O5);
  const Subspace alpha0 = Subspace::span_of({{Rat(1), 0, 0, 0, 0, 0}});
  const Subspace a0 = Subspace(6, Matrix::from_rows({{Rat(1), 0, 0, 0, 0, 0},
                                                     {0, Rat(1), 0, 0, 0, 0},
                                                     {0, 0, Rat(1), 0, 0, 0},
                                                     {0, 0, 0, Rat(1), 0, 0},
                                                     {0, 0, 0, 0, Rat(1), 0}}));
  for (int trial = 0; trial < 15; ++trial) {
    const Matrix g = fixtures::random_gl(rng, 6);
    const Multivector gw = apply_gl(g, w5);
    const O5Data data = o5_decompose(gw);
    CHECK(data.alpha == Subspace(6, alpha0.basis() * g.transpose()));
    CHECK(data.hyperplane == Subspace(6, a0.basis() * g.transpose()));
    // roundtrip: alpha ^ sigma reproduces the form, sigma is indecomposable
    const Multivector a = Multivector::from_vector(6, data.alpha.generator());
    CHECK(proportional(wedge(a, data.sigma), gw));
    CHECK(data.hyperplane.includes(data.alpha));
    CHECK(!wedge(data.sigma, data.sigma).is_zero());
  }
}

TEST_CASE("schubert membership") {
  const Subspace alpha = Subspace::span_of({{Rat(1), 0, 0, 0, 0, 0}});
  const Subspace a = Subspace(6, Matrix::from_rows({{Rat(1), 0, 0, 0, 0, 0},
                                                    {0, Rat(1), 0, 0, 0, 0},
                                                    {0, 0, Rat(1), 0, 0, 0},
                                                    {0, 0, 0, Rat(1), 0, 0},
                                                    {0, 0, 0, 0, Rat(1), 0}}));
  auto plane = [](std::initializer_list<int> axes) {
    std::vector<std::vector<Rat>> rows;
    for (int ax : axes) {
      std::vector<Rat> r(6, Rat(0));
      r[ax - 1] = Rat(1);
      rows.push_back(r);
    }
    return Subspace::span_of(rows);
  };
  CHECK(in_schubert(plane({1, 2, 3}), alpha, a));
  CHECK(!in_schubert(plane({1, 2, 6}), alpha, a));
  CHECK(!in_schubert(plane({2, 3, 4}), alpha, a));
  CHECK_THROWS_AS(in_schubert(plane({1, 2, 3}), plane({6}), a), std::invalid_argument);
}

TEST_CASE("line trichotomy on the three fixtures") {
  {
    const auto [a, b] = fixtures::line_fixture(1);
    const LineTypeResult res = classify_line(a, b);
    CHECK(res.type == 1);
    REQUIRE(res.shared_alpha.has_value());
    CHECK(*res.shared_alpha == Subspace::span_of({{Rat(1), 0, 0, 0, 0, 0}}));
  }
  {
    const auto [a, b] = fixtures::line_fixture(2);
    const LineTypeResult res = classify_line(a, b);
    CHECK(res.type == 2);
    REQUIRE(res.common_sigma.has_value());
    CHECK(*res.common_sigma == e(6, {3, 4}) + e(6, {5, 6}));
    // certificates satisfy a_i ^ sigma = w_i exactly
    CHECK(wedge(*res.alpha1, *res.common_sigma) == a);
    CHECK(wedge(*res.alpha2, *res.common_sigma) == b);
  }
  {
    const auto [a, b] = fixtures::line_fixture(3);
    const LineTypeResult res = classify_line(a, b);
    CHECK(res.type == 3);
    REQUIRE(res.shared_hyperplane.has_value());
    CHECK(*res.shared_hyperplane ==
          Subspace(6, Matrix::from_rows({{Rat(1), 0, 0, 0, 0, 0},
                                         {0, Rat(1), 0, 0, 0, 0},
                                         {0, 0, Rat(1), 0, 0, 0},
                                         {0, 0, 0, Rat(1), 0, 0},
                                         {0, 0, 0, 0, Rat(1), 0}})));
  }
}

TEST_CASE("line classification rejects bad input") {
  const Multivector w5 = fixtures::normal_form(OrbitLabel::O5);
  CHECK_THROWS_AS(classify_line(w5, Rat(2) * w5), std::invalid_argument);
  CHECK_THROWS_AS(classify_line(w5, fixtures::normal_form(OrbitLabel::O0)),
                  std::domain_error);
  // pencil through two O5 points that leaves O5 in between
  const Multivector a = e(6, {1, 2, 3}) + e(6, {1, 4, 5});  // e1 ^ (e23+e45)
  const Multivector b = e(6, {1, 2, 6}) + e(6, {3, 4, 6});  // e6 ^ (e12+e34)
  CHECK_THROWS_AS(classify_line(a, b), std::domain_error);
}

TEST_CASE("type-2 certificates on scaled inputs") {
  Lcg64 rng(127);
  const auto [a, b] = fixtures::line_fixture(2);
  const Multivector a2 = Rat(3) * a;
  const Multivector b2 = Rat::ratio(-2, 5) * b;
  const LineTypeResult res = classify_line(a2, b2);
  CHECK(res.type == 2);
  CHECK(wedge(*res.alpha1, *res.common_sigma) == a2);
  CHECK(wedge(*res.alpha2, *res.common_sigma) == b2);
}
