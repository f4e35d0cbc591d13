#include <doctest.h>

#include <stdexcept>

#include "exgr/fixtures.hpp"
#include "exgr/grass.hpp"
#include "test_helpers.hpp"

using namespace exgr;
using exgr::testing::e;
using exgr::testing::random_mv;

namespace {

std::vector<Rat> rv(std::initializer_list<int> vals) {
  std::vector<Rat> v;
  for (int x : vals) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("pluecker embedding on the stated examples") {
  CHECK(pluecker(6, {rv({1, 0, 0, 0, 0, 0}), rv({0, 1, 0, 0, 0, 0}),
                     rv({0, 0, 1, 0, 0, 0})})
            .mv() == e(6, {1, 2, 3}));
  CHECK(pluecker(6, {rv({1, 0, 0, 1, 0, 0}), rv({0, 1, 0, 0, 0, 0}),
                     rv({0, 0, 1, 0, 0, 0})})
            .mv() == e(6, {1, 2, 3}) + e(6, {2, 3, 4}));
  CHECK(pluecker(4, {rv({2, 0, 0, 0}), rv({0, 1, 0, 0})}).mv() == e(4, {1, 2}));
  CHECK_THROWS_AS(pluecker(4, {rv({1, 2, 0, 0}), rv({2, 4, 0, 0})}),
                  std::invalid_argument);
}

TEST_CASE("pluecker is basis-independent") {
  Lcg64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const Subspace plane = fixtures::random_plane(rng, 6, 3);
    // rescramble the basis by a random invertible transformation
    const Matrix g = fixtures::random_gl(rng, 3);
    const Matrix alt = g * plane.basis();
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < 3; ++i) rows.push_back(alt.row(i));
    CHECK(pluecker(plane) == pluecker(6, rows));
  }
}

TEST_CASE("decomposability by the kernel criterion") {
  const auto sub = is_decomposable(e(6, {1, 2, 3}));
  REQUIRE(sub.has_value());
  CHECK(*sub == Subspace::span_of({rv({1, 0, 0, 0, 0, 0}), rv({0, 1, 0, 0, 0, 0}),
                                   rv({0, 0, 1, 0, 0, 0})}));
  CHECK(!is_decomposable(e(6, {1, 2, 3}) + e(6, {4, 5, 6})).has_value());
  CHECK(!is_decomposable(e(4, {1, 2}) + e(4, {3, 4})).has_value());
}

TEST_CASE("decomposability round-trips through pluecker") {
  Lcg64 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const Subspace plane = fixtures::random_plane(rng, 6, 3);
    const auto rec = is_decomposable(pluecker(plane).mv());
    REQUIRE(rec.has_value());
    CHECK(*rec == plane);
  }
}

TEST_CASE("dimension-4 quadric shortcut agrees with the kernel criterion") {
  Lcg64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const Multivector w = random_mv(rng, 4, 2);
    if (w.is_zero()) continue;
    const bool quadric_zero = wedge(w, w).is_zero();
    CHECK(is_decomposable(w).has_value() == quadric_zero);
  }
}

TEST_CASE("skew complement pairs and involution") {
  // pairing (e1,e3),(e2,e4) on dimension 4
  Multivector s(4, 2);
  s.set_term({1, 3}, Rat(1));
  s.set_term({2, 4}, Rat(1));
  const SymplecticForm form(s);
  CHECK(form.dual_matrix() * form.form_matrix() == Matrix::identity(4));

  const Subspace lagr = Subspace::span_of({rv({1, 0, 0, 0}), rv({0, 1, 0, 0})});
  CHECK(skew_complement(lagr, form) == lagr);
  const Subspace l13 = Subspace::span_of({rv({1, 0, 0, 0}), rv({0, 0, 1, 0})});
  CHECK(skew_complement(l13, form) ==
        Subspace::span_of({rv({0, 1, 0, 0}), rv({0, 0, 0, 1})}));

  Lcg64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const Subspace l = fixtures::random_plane(rng, 4, rng.next_int(1, 3));
    CHECK(skew_complement(skew_complement(l, form), form) == l);
    CHECK(skew_complement(l, form).dim() == 4 - l.dim());
  }
  Multivector degenerate(4, 2);
  degenerate.set_term({1, 2}, Rat(1));
  CHECK_THROWS_AS(SymplecticForm{degenerate}, std::domain_error);
}

TEST_CASE("projection through a center") {
  const Center z = Center::from_spanning(6, 3, {e(6, {1, 2, 3}) + e(6, {4, 5, 6})});
  CHECK(project(e(6, {1, 2, 3}), z) == project(Rat(-1) * e(6, {4, 5, 6}), z));
  CHECK_THROWS_AS(
      project(e(6, {1, 2, 3}),
              Center::from_spanning(6, 3, {e(6, {1, 2, 3})})),
      std::domain_error);

  // scale invariance
  Lcg64 rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    Multivector w = random_mv(rng, 6, 3);
    if (w.is_zero() || z.contains(w)) continue;
    const Rat c(rng.next_nonzero_int(-7, 7));
    CHECK(project(w, z) == project(c * w, z));
  }
}

TEST_CASE("projection through V ^ sigma identifies skew-complementary planes") {
  const Multivector sigma = fixtures::sigma_standard6();
  const Center z = fixtures::v_wedge_sigma(sigma);
  const SymplecticForm form(sigma);
  Lcg64 rng(83);
  for (int trial = 0; trial < 25; ++trial) {
    const Subspace plane = fixtures::random_plane(rng, 6, 3);
    const Subspace comp = skew_complement(plane, form);
    if (comp == plane) continue;
    CHECK(project(pluecker(plane).mv(), z) == project(pluecker(comp).mv(), z));
  }
}

TEST_CASE("secant line meets the center") {
  const Center z = Center::from_spanning(6, 3, {e(6, {1, 2, 3}) + e(6, {4, 5, 6})});
  const PluckerPoint l1(e(6, {1, 2, 3}));
  const PluckerPoint l2(e(6, {4, 5, 6}));
  const auto hit = secant_meets_center(l1, l2, z);
  REQUIRE(hit.has_value());
  CHECK(proportional(*hit, e(6, {1, 2, 3}) + e(6, {4, 5, 6})));

  const PluckerPoint l3(e(6, {1, 4, 5}));
  CHECK(!secant_meets_center(l1, l3, z).has_value());
  CHECK_THROWS_AS(secant_meets_center(l1, l1, z), std::invalid_argument);
}

TEST_CASE("fiber partners on the split normal form") {
  const PluckerPoint base(e(6, {1, 2, 3}));
  const PluckerPoint w(e(6, {1, 2, 3}) + e(6, {4, 5, 6}));
  const FiberResult res = fiber_partners(base, w);
  REQUIRE(res.partners.size() == 1);
  CHECK(res.partners[0] == PluckerPoint(e(6, {4, 5, 6})));
  CHECK(res.partner_planes[0] ==
        Subspace::span_of({rv({0, 0, 0, 1, 0, 0}), rv({0, 0, 0, 0, 1, 0}),
                           rv({0, 0, 0, 0, 0, 1})}));
  CHECK(res.tangency_mult == 0);
  CHECK(res.nonrational_roots == 0);
}

TEST_CASE("fiber partners on the O5 normal form") {
  const PluckerPoint base(e(6, {1, 2, 3}));
  const PluckerPoint w(fixtures::normal_form(OrbitLabel::O5));
  const FiberResult res = fiber_partners(base, w);
  REQUIRE(res.partners.size() == 1);
  CHECK(res.partners[0] == PluckerPoint(e(6, {1, 4, 5})));
}

TEST_CASE("fiber partners through a tangent-space point are empty") {
  const PluckerPoint w(fixtures::normal_form(OrbitLabel::O1));
  Lcg64 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const PluckerPoint base = pluecker(fixtures::random_plane(rng, 6, 3));
    const FiberResult res = fiber_partners(base, w);
    CHECK(res.partners.empty());
  }
}

TEST_CASE("fiber partner preconditions") {
  CHECK_THROWS_AS(fiber_partners(PluckerPoint(e(6, {1, 2, 3}) + e(6, {4, 5, 6})),
                                 PluckerPoint(e(6, {1, 2, 4}))),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      fiber_partners(PluckerPoint(e(6, {1, 2, 3})), PluckerPoint(e(6, {1, 2, 4}))),
      std::invalid_argument);
}

TEST_CASE("fiber partner symmetry and collinearity") {
  Lcg64 rng(97);
  const Multivector sigma = fixtures::sigma_standard4();
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 15; ++trial) {
    const Subspace plane = fixtures::random_plane(rng, 4, 2);
    const PluckerPoint base = pluecker(plane);
    const PluckerPoint w(sigma);
    if (base == w) continue;
    const FiberResult res = fiber_partners(base, w);
    for (size_t i = 0; i < res.partners.size(); ++i) {
      const FiberResult back = fiber_partners(res.partners[i], w);
      // the original plane must appear among the partner's partners
      bool found = false;
      for (const PluckerPoint& q : back.partners) found = found || q == base;
      CHECK(found);
      // w lies on the line joining the pair
      Matrix stacked(3, 6);
      const std::vector<Rat> bc = base.mv().coords();
      const std::vector<Rat> pc = res.partners[i].mv().coords();
      const std::vector<Rat> wc = w.mv().coords();
      for (int j = 0; j < 6; ++j) {
        stacked.at(0, j) = bc[j];
        stacked.at(1, j) = pc[j];
        stacked.at(2, j) = wc[j];
      }
      CHECK(rank(stacked) == 2);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("double cover law on the dimension-4 Grassmannian") {
  const Multivector sigma = fixtures::sigma_standard4();
  const SymplecticForm form(sigma);
  const PluckerPoint w(sigma);
  Lcg64 rng(101);
  int lagrangian = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Subspace plane = fixtures::random_plane(rng, 4, 2);
    const Subspace comp = skew_complement(plane, form);
    const FiberResult res = fiber_partners(pluecker(plane), w);
    if (comp == plane) {
      ++lagrangian;
      CHECK(res.partners.empty());
      CHECK(res.tangency_mult == 1);
    } else {
      REQUIRE(res.partners.size() == 1);
      CHECK(res.partner_planes[0] == comp);
    }
  }
  CHECK(lagrangian < 100);
}
