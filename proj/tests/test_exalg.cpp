#include <doctest.h>

#include <stdexcept>

#include "exgr/multivector.hpp"
#include "test_helpers.hpp"

using namespace exgr;
using exgr::testing::e;
using exgr::testing::perm_sign;
using exgr::testing::random_mv;

TEST_CASE("wedge on basis monomials") {
  CHECK(wedge(e(6, {1}), e(6, {2, 3})) == e(6, {1, 2, 3}));

  const Multivector w = e(6, {1, 2}) + e(6, {3, 4});
  Multivector expected(6, 4);
  expected.set_term({1, 2, 3, 4}, Rat(2));
  CHECK(wedge(w, w) == expected);

  // a point on the line between two intersecting planes
  CHECK(wedge(e(6, {1}), e(6, {2, 3}) + e(6, {4, 5})) ==
        e(6, {1, 2, 3}) + e(6, {1, 4, 5}));
}

TEST_CASE("wedge sign agrees with the permutation-parity oracle") {
  for (const IndexSet& a : wedge_basis(6, 2)) {
    for (const IndexSet& b : wedge_basis(6, 3)) {
      std::vector<int> concat = a;
      concat.insert(concat.end(), b.begin(), b.end());
      const int sign = perm_sign(concat);
      const Multivector prod = wedge(e(6, a), e(6, b));
      if (sign == 0) {
        CHECK(prod.is_zero());
      } else {
        IndexSet sorted = concat;
        std::sort(sorted.begin(), sorted.end());
        CHECK(prod.coeff(sorted) == Rat(sign));
      }
    }
  }
}

TEST_CASE("wedge grade overflow clamps to zero") {
  const Multivector a = e(4, {1, 2, 3});
  const Multivector b = e(4, {2, 3});
  const Multivector prod = wedge(a, b);
  CHECK(prod.is_zero());
  CHECK(prod.grade() == 4);
  CHECK_THROWS_AS(wedge(e(4, {1}), e(5, {2})), std::invalid_argument);
}

TEST_CASE("wedge is graded-anticommutative and associative") {
  Lcg64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int j = rng.next_int(1, 2);
    const int k = rng.next_int(1, 3);
    const Multivector a = random_mv(rng, 6, j);
    const Multivector b = random_mv(rng, 6, k);
    const Rat sign((j * k) % 2 == 0 ? 1 : -1);
    CHECK(wedge(a, b) == sign * wedge(b, a));
    const Multivector c = random_mv(rng, 6, 1);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("grade-1 squares vanish") {
  Lcg64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Multivector v = random_mv(rng, 6, 1);
    CHECK(wedge(v, v).is_zero());
  }
}

TEST_CASE("contraction on basis monomials") {
  CHECK(contract(e(6, {1}), e(6, {1, 2, 3})) == e(6, {2, 3}));
  CHECK(contract(e(6, {6}), e(6, {1, 2, 3}) + e(6, {1, 4, 5})).is_zero());
  CHECK(contract(e(6, {3}), e(6, {1, 2, 3})) == e(6, {1, 2}));
}

TEST_CASE("contraction is a graded derivation of the wedge") {
  Lcg64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int j = rng.next_int(1, 2);
    const Multivector phi = random_mv(rng, 6, 1);
    const Multivector a = random_mv(rng, 6, j);
    const Multivector b = random_mv(rng, 6, 2);
    const Rat sign(j % 2 == 0 ? 1 : -1);
    CHECK(contract(phi, wedge(a, b)) ==
          wedge(contract(phi, a), b) + sign * wedge(a, contract(phi, b)));
  }
}

TEST_CASE("top pairing values and nondegeneracy") {
  CHECK(top_pairing(e(6, {1, 2, 3}), e(6, {4, 5, 6})) == Rat(1));
  CHECK(top_pairing(e(6, {1, 2, 3}), e(6, {1, 2, 3})) == Rat(0));
  // derived from the inversion count of (1,2,4,3,5,6)
  CHECK(top_pairing(e(6, {1, 2, 4}), e(6, {3, 5, 6})) == Rat(-1));
  CHECK_THROWS_AS(top_pairing(e(6, {1, 2}), e(6, {3, 4})), std::invalid_argument);

  for (int k : {2, 3}) {
    const auto& rows = wedge_basis(6, k);
    const auto& cols = wedge_basis(6, 6 - k);
    // Gram matrix must be a signed permutation: one +-1 per row and column.
    std::vector<int> col_hits(cols.size(), 0);
    for (const IndexSet& r : rows) {
      int row_hits = 0;
      for (size_t j = 0; j < cols.size(); ++j) {
        const Rat v = top_pairing(e(6, r), e(6, cols[j]));
        if (v.is_zero()) continue;
        CHECK(abs(v) == Rat(1));
        ++row_hits;
        ++col_hits[j];
      }
      CHECK(row_hits == 1);
    }
    for (int h : col_hits) CHECK(h == 1);
  }
}

TEST_CASE("coordinates round-trip in lexicographic order") {
  Lcg64 rng(5);
  const Multivector w = random_mv(rng, 6, 3);
  CHECK(Multivector::from_coords(6, 3, w.coords()) == w);
  // term iteration must be lexicographic
  IndexSet prev;
  for (const auto& [idx, c] : w.terms()) {
    if (!prev.empty()) CHECK(prev < idx);
    prev = idx;
  }
}

TEST_CASE("set_term validates index sets") {
  Multivector w(6, 2);
  CHECK_THROWS_AS(w.set_term({2, 1}, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(w.set_term({1, 7}, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(w.set_term({1, 1}, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(w.set_term({1}, Rat(1)), std::invalid_argument);
  w.set_term({1, 2}, Rat(1));
  w.set_term({1, 2}, Rat(0));
  CHECK(w.is_zero());
}

TEST_CASE("apply_gl is multiplicative and matches column wedges") {
  Lcg64 rng(11);
  Matrix g(6, 6), h(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      g.at(i, j) = Rat(rng.next_int(-2, 2));
      h.at(i, j) = Rat(rng.next_int(-2, 2));
    }
  const Multivector w = random_mv(rng, 6, 3);
  CHECK(apply_gl(g, apply_gl(h, w)) == apply_gl(g * h, w));
  CHECK(apply_gl(Matrix::identity(6), w) == w);
}
