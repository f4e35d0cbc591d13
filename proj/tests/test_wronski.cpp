#include <doctest.h>

#include <stdexcept>

#include "exgr/fixtures.hpp"
#include "exgr/selfadj.hpp"
#include "exgr/wronski.hpp"
#include "test_helpers.hpp"

using namespace exgr;

namespace {

Poly mono(int d) { return Poly::monomial(Rat(1), d); }

Poly poly(std::initializer_list<int> low_first) {
  std::vector<Rat> c;
  for (int v : low_first) c.emplace_back(v);
  return Poly(std::move(c));
}

std::vector<Poly> monomial_basis(int n) {
  std::vector<Poly> fs;
  for (int d = 0; d < n; ++d) fs.push_back(mono(d));
  return fs;
}

// Test-side differentiation, independent of Poly::derivative.
Poly diff_oracle(const Poly& p) {
  std::vector<Rat> out;
  for (int k = 1; k <= p.deg(); ++k) out.push_back(Rat(k) * p.coeff(k));
  return Poly(std::move(out));
}

RatFunc rf(const Poly& p) { return RatFunc::from_poly(p); }

}  // namespace

TEST_CASE("wronskian on the stated examples") {
  CHECK(wronskian({mono(0), mono(1), mono(2)}) == poly({2}));
  CHECK(wronskian({mono(1), mono(2)}) == poly({0, 0, 1}));
  CHECK_THROWS_AS(wronskian({}), std::invalid_argument);
}

TEST_CASE("wronskian scales by the determinant under basis change") {
  Lcg64 rng(157);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> fs;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rat> c;
      for (int d = 0; d <= 3; ++d) c.emplace_back(rng.next_int(-3, 3));
      fs.push_back(Poly(c));
    }
    const Matrix g = fixtures::random_gl(rng, 3);
    std::vector<Poly> gs(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) gs[i] = gs[i] + g.at(i, j) * fs[j];
    CHECK(wronskian(gs) == det(g) * wronskian(fs));
  }
}

TEST_CASE("wronskian agrees with pointwise determinant evaluation") {
  Lcg64 rng(163);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> fs;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rat> c;
      for (int d = 0; d <= 4; ++d) c.emplace_back(rng.next_int(-2, 2));
      fs.push_back(Poly(c));
    }
    const Poly w = wronskian(fs);
    for (int pt = 0; pt < 3; ++pt) {
      const Rat t0 = rng.next_rat(5, 3);
      Matrix m(3, 3);
      for (int j = 0; j < 3; ++j) {
        Poly cur = fs[j];
        for (int i = 0; i < 3; ++i) {
          m.at(i, j) = cur.eval(t0);
          cur = diff_oracle(cur);
        }
      }
      CHECK(w.eval(t0) == det(m));
    }
  }
}

TEST_CASE("formal adjoint on the stated examples") {
  // x'' is self-adjoint
  const Odo ddx{2, {rf(Poly()), rf(Poly())}};
  CHECK(formal_adjoint(ddx) == ddx);

  // x'' + t x'  ->  x'' - t x' - x
  const Odo l{2, {rf(Poly()), rf(poly({0, 1}))}};
  const Odo adj = formal_adjoint(l);
  CHECK(adj.coeffs[1] == rf(poly({0, -1})));
  CHECK(adj.coeffs[0] == rf(poly({-1})));
}

TEST_CASE("formal adjoint is an involution") {
  Lcg64 rng(167);
  for (int order = 1; order <= 4; ++order) {
    for (int trial = 0; trial < 5; ++trial) {
      Odo l;
      l.order = order;
      for (int i = 0; i < order; ++i) {
        std::vector<Rat> c;
        for (int d = 0; d <= 2; ++d) c.emplace_back(rng.next_int(-3, 3));
        l.coeffs.push_back(rf(Poly(c)));
      }
      CHECK(formal_adjoint(formal_adjoint(l)) == l);
    }
  }
}

TEST_CASE("mu conjugation") {
  const Odo l{1, {rf(Poly())}};  // x'
  const Odo conj = mu_conjugate(l, rf(poly({0, 1})));
  CHECK(conj.coeffs[0] == RatFunc(Poly::constant(1), poly({0, 1})));  // + x/t

  // constant mu leaves the operator unchanged
  const Odo l2{3, {rf(poly({1, 2})), rf(poly({0, 1})), rf(poly({-1}))}};
  CHECK(mu_conjugate(l2, rf(poly({5}))) == l2);
  CHECK_THROWS_AS(mu_conjugate(l2, RatFunc()), std::invalid_argument);

  // conjugating by mu then 1/mu restores the operator
  const RatFunc mu(poly({1, 1}), poly({1}));
  CHECK(mu_conjugate(mu_conjugate(l2, mu), RatFunc(poly({1}), poly({1, 1}))) == l2);
}

TEST_CASE("self-adjointness of operators") {
  const Odo x4{4, {rf(Poly()), rf(Poly()), rf(Poly()), rf(Poly())}};
  CHECK(is_self_adjoint_op(x4));
  const Odo x6{6, std::vector<RatFunc>(6)};
  CHECK(is_self_adjoint_op(x6));
  const Odo drift{2, {rf(Poly()), rf(poly({0, 1}))}};
  CHECK(!is_self_adjoint_op(drift));
  const Odo x1{1, {rf(Poly())}};
  CHECK(!is_self_adjoint_op(x1));
  const Odo x3{3, std::vector<RatFunc>(3)};
  CHECK(!is_self_adjoint_op(x3));
}

TEST_CASE("center of the classical order-4 system") {
  const CenterBuild cb = build_center(monomial_basis(4), 2);
  CHECK(cb.x.dim() == 5);
  CHECK(cb.z.dim() == 1);
  const Multivector gen = cb.z.basis_multivectors()[0];
  CHECK(!is_decomposable(gen).has_value());
  CHECK(!pfaffian(two_form_matrix(gen)).is_zero());
  CHECK(recover_symplectic(cb.z).self_adjoint());
}

TEST_CASE("center of the classical order-6 system") {
  const CenterBuild cb = build_center(monomial_basis(6), 3);
  // one coefficient vector per minor degree 0..9
  CHECK(cb.x.dim() == 10);
  CHECK(cb.z.dim() == 10);
  const SelfAdjointVerdict v = recover_symplectic(cb.z);
  REQUIRE(v.self_adjoint());
  CHECK(contains_sigma_wedge(cb.z, *v.sigma, 3));
  CHECK(!pfaffian(two_form_matrix(*v.sigma)).is_zero());
  // the recovered form pairs only complementary-degree solutions
  Multivector expected(6, 2);
  expected.set_term({1, 6}, Rat::ratio(1, 10));
  expected.set_term({2, 5}, Rat::ratio(-1, 2));
  expected.set_term({3, 4}, Rat(1));
  CHECK(proportional(*v.sigma, expected));
  // sampled elements of the center stay off the Grassmannian
  Lcg64 rng(173);
  for (const Multivector& b : cb.z.basis_multivectors())
    CHECK(!is_decomposable(b).has_value());
  for (int t = 0; t < 20; ++t) {
    Multivector s(6, 3);
    while (s.is_zero()) {
      s = Multivector(6, 3);
      for (const Multivector& b : cb.z.basis_multivectors()) {
        const Rat c(rng.next_int(-9, 9));
        if (!c.is_zero()) s = s + c * b;
      }
    }
    CHECK(!is_decomposable(s).has_value());
  }
}

TEST_CASE("degenerate and small-center order choices") {
  // m = 1: the curve spans the full dual space, so the center is zero
  const CenterBuild m1 = build_center(monomial_basis(4), 1);
  CHECK(m1.x.dim() == 4);
  CHECK(m1.z.dim() == 0);

  // a non-self-adjoint order-4 system: full span, zero center, degree-1 route
  const CenterBuild skew = build_center({mono(0), mono(1), mono(2), mono(4)}, 2);
  CHECK(skew.z.dim() == 0);
  CHECK(recover_symplectic(skew.z).status == VerdictStatus::DegreeOneEvidence);

  // another order-4 system equivalent to a self-adjoint one
  const CenterBuild sa = build_center({mono(0), mono(1), mono(3), mono(4)}, 2);
  CHECK(sa.z.dim() == 1);
  CHECK(recover_symplectic(sa.z).self_adjoint());

  // order-6 system with a small nonzero center reports degree-1 evidence
  const CenterBuild small =
      build_center({mono(0), mono(1), mono(2), mono(3), mono(5), mono(9)}, 3);
  CHECK(small.z.dim() == 5);
  CHECK(recover_symplectic(small.z).status == VerdictStatus::DegreeOneEvidence);

  CHECK_THROWS_AS(build_center(monomial_basis(4), 0), std::invalid_argument);
  CHECK_THROWS_AS(build_center(monomial_basis(4), 4), std::invalid_argument);
  CHECK_THROWS_AS(build_center({mono(1), mono(1)}, 1), std::invalid_argument);
}

TEST_CASE("duality of the center dimensions") {
  Lcg64 rng(179);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = rng.next_int(3, 5);
    const int m = rng.next_int(1, n - 1);
    std::vector<Poly> fs;
    do {
      fs.clear();
      for (int i = 0; i < n; ++i) {
        std::vector<Rat> c;
        for (int d = 0; d <= n; ++d) c.emplace_back(rng.next_int(-3, 3));
        fs.push_back(Poly(c));
      }
    } while (wronskian(fs).is_zero());
    const CenterBuild cb = build_center(fs, m);
    CHECK(cb.x.dim() + cb.z.dim() == binom(n, m));
  }
}

TEST_CASE("schubert degree formula") {
  CHECK(schubert_degree(2, 4) == BigInt(2));
  CHECK(schubert_degree(3, 6) == BigInt(42));
  CHECK(schubert_degree(2, 5) == BigInt(5));
  CHECK(schubert_degree(2, 6) == BigInt(14));
  for (int n = 2; n <= 10; ++n) {
    CHECK(schubert_degree(1, n) == BigInt(1));
    CHECK(schubert_degree(n - 1, n) == BigInt(1));
  }
  CHECK_THROWS_AS(schubert_degree(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(schubert_degree(4, 4), std::invalid_argument);
}

TEST_CASE("wronski map on coordinate planes") {
  const auto fs = monomial_basis(4);
  CHECK(wronski_map(fs, Subspace::span_of({{Rat(1), 0, 0, 0}, {0, Rat(1), 0, 0}})) ==
        poly({1}));
  CHECK(wronski_map(fs, Subspace::span_of({{0, 0, Rat(1), 0}, {0, 0, 0, Rat(1)}})) ==
        mono(4));
  // scaled solution sets give proportional wronskians
  CHECK(poly_proportional(wronskian({Rat(3) * mono(2), Rat(-2) * mono(3)}),
                          wronskian({mono(2), mono(3)})));
}

TEST_CASE("wronski map factors through the Plucker embedding") {
  // Cauchy-Binet: Wr of the selected solutions equals the pairing of the
  // plane's Plucker vector with the Wronskian minors.
  Lcg64 rng(181);
  const auto fs = monomial_basis(6);
  const auto& basis = wedge_basis(6, 3);
  std::vector<Poly> minors;
  for (const IndexSet& idx : basis) {
    std::vector<Poly> sub;
    for (int i : idx) sub.push_back(fs[i - 1]);
    minors.push_back(wronskian(sub));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Subspace plane = fixtures::random_plane(rng, 6, 3);
    const std::vector<Rat> p = pluecker(plane).mv().coords();
    Poly expected;
    for (size_t k = 0; k < basis.size(); ++k) expected = expected + p[k] * minors[k];
    CHECK(poly_proportional(wronski_map(fs, plane), expected));
  }
}

TEST_CASE("kernel of the wronskian-coefficient map is the center") {
  const auto fs = monomial_basis(6);
  const CenterBuild cb = build_center(fs, 3);
  const auto& basis = wedge_basis(6, 3);
  // matrix sending Plucker coordinates to wronskian coefficient vectors
  int max_deg = 0;
  std::vector<Poly> minors;
  for (const IndexSet& idx : basis) {
    std::vector<Poly> sub;
    for (int i : idx) sub.push_back(fs[i - 1]);
    minors.push_back(wronskian(sub));
    max_deg = std::max(max_deg, minors.back().deg());
  }
  Matrix m(max_deg + 1, static_cast<int>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k)
    for (int d = 0; d <= max_deg; ++d) m.at(d, static_cast<int>(k)) = minors[k].coeff(d);
  CHECK(kernel(m) == cb.z.span());
}

TEST_CASE("wronskians are constant on double-cover fibers of the classical map") {
  const auto fs = monomial_basis(6);
  const CenterBuild cb = build_center(fs, 3);
  const SelfAdjointVerdict v = recover_symplectic(cb.z);
  REQUIRE(v.self_adjoint());
  const SymplecticForm form(*v.sigma);
  Lcg64 rng(191);
  int checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const Subspace plane = fixtures::random_plane(rng, 6, 3);
    const Subspace comp = skew_complement(plane, form);
    if (comp == plane) continue;
    CHECK(poly_proportional(wronski_map(fs, plane), wronski_map(fs, comp)));
    ++checked;
  }
  CHECK(checked > 0);
}
