#include "exgr/fixtures.hpp"

#include <stdexcept>

namespace exgr::fixtures {

Multivector normal_form(OrbitLabel label) {
  Multivector w(6, 3);
  switch (label) {
    case OrbitLabel::O0:
      w.set_term({1, 2, 3}, Rat(1));
      w.set_term({4, 5, 6}, Rat(1));
      break;
    case OrbitLabel::O1:
      // e126 - e153 + e234, written on sorted index sets
      w.set_term({1, 2, 6}, Rat(1));
      w.set_term({1, 3, 5}, Rat(1));
      w.set_term({2, 3, 4}, Rat(1));
      break;
    case OrbitLabel::O5:
      // e1 ^ (e23 + e45)
      w.set_term({1, 2, 3}, Rat(1));
      w.set_term({1, 4, 5}, Rat(1));
      break;
    case OrbitLabel::O10:
      w.set_term({1, 2, 3}, Rat(1));
      break;
  }
  return w;
}

Multivector sigma_standard6() {
  Multivector s(6, 2);
  s.set_term({1, 2}, Rat(1));
  s.set_term({3, 4}, Rat(1));
  s.set_term({5, 6}, Rat(1));
  return s;
}

Multivector sigma_standard4() {
  Multivector s(4, 2);
  s.set_term({1, 2}, Rat(1));
  s.set_term({3, 4}, Rat(1));
  return s;
}

Center v_wedge_sigma(const Multivector& sigma) {
  const int n = sigma.dim();
  std::vector<Multivector> gens;
  gens.reserve(n);
  for (int i = 1; i <= n; ++i)
    gens.push_back(wedge(Multivector::basis_element(n, {i}), sigma));
  return Center::from_spanning(n, 3, gens);
}

Matrix random_gl(Lcg64& rng, int n, int lo, int hi) {
  Matrix g(n, n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = Rat(rng.next_int(lo, hi));
  } while (det(g).is_zero());
  return g;
}

Subspace random_plane(Lcg64& rng, int n, int m, int lo, int hi) {
  Matrix rows(m, n);
  do {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) rows.at(i, j) = Rat(rng.next_int(lo, hi));
  } while (rank(rows) != m);
  return Subspace(n, rows);
}

Multivector random_form(Lcg64& rng, int n, int k, int lo, int hi) {
  Multivector w(n, k);
  while (w.is_zero()) {
    for (const IndexSet& idx : wedge_basis(n, k)) {
      const Rat c(rng.next_int(lo, hi));
      if (!c.is_zero()) w.set_term(idx, c);
    }
  }
  return w;
}

Multivector random_symplectic(Lcg64& rng, int n, int lo, int hi) {
  for (;;) {
    const Multivector s = random_form(rng, n, 2, lo, hi);
    if (!pfaffian(two_form_matrix(s)).is_zero()) return s;
  }
}

Center perturbed_center(Lcg64& rng, const Multivector& sigma) {
  const int n = sigma.dim();
  for (;;) {
    std::vector<Multivector> gens;
    for (int i = 1; i < n; ++i)
      gens.push_back(wedge(Multivector::basis_element(n, {i}), sigma));
    gens.push_back(wedge(Multivector::basis_element(n, {n}), sigma) +
                   random_form(rng, n, 3, -3, 3));
    Center z = Center::from_spanning(n, 3, gens);
    if (z.dim() == n) return z;
  }
}

Realization siso_double_integrator() {
  Realization s;
  s.a = Matrix(2, 2);
  s.a.at(0, 1) = Rat(1);
  s.b = Matrix(2, 1);
  s.b.at(1, 0) = Rat(1);
  s.c = Matrix(1, 2);
  s.c.at(0, 0) = Rat(1);
  return s;
}

Realization symmetric22() {
  Realization s;
  s.a = Matrix(4, 4);
  s.a.at(0, 0) = Rat(1);
  s.a.at(1, 1) = Rat(-1);
  s.a.at(2, 2) = Rat(2);
  s.a.at(3, 3) = Rat(-2);
  s.a.at(0, 1) = s.a.at(1, 0) = Rat(1);
  s.a.at(2, 3) = s.a.at(3, 2) = Rat(1);
  s.b = Matrix(4, 2);
  s.b.at(0, 0) = Rat(1);
  s.b.at(1, 1) = Rat(1);
  s.b.at(2, 0) = Rat(1);
  s.b.at(3, 1) = Rat(-1);
  s.c = s.b.transpose();
  return s;
}

Realization symmetric33(std::uint64_t seed) {
  Lcg64 rng(seed);
  const int n = 13, m = 3;
  for (;;) {
    Realization s;
    s.a = Matrix(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const Rat v(rng.next_int(-2, 2));
        s.a.at(i, j) = v;
        s.a.at(j, i) = v;
      }
    s.b = Matrix(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) s.b.at(i, j) = Rat(rng.next_int(-2, 2));
    s.c = s.b.transpose();
    if (!is_minimal(s)) continue;
    return s;
  }
}

Realization random_realization(Lcg64& rng, int n, int m, int p, int lo, int hi) {
  Realization s;
  s.a = Matrix(n, n);
  s.b = Matrix(n, m);
  s.c = Matrix(p, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.a.at(i, j) = Rat(rng.next_int(lo, hi));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) s.b.at(i, j) = Rat(rng.next_int(lo, hi));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < n; ++j) s.c.at(i, j) = Rat(rng.next_int(lo, hi));
  return s;
}

std::pair<Multivector, Multivector> line_fixture(int type) {
  Multivector a(6, 3), b(6, 3);
  switch (type) {
    case 1:
      // e1 ^ (e23 + e45) and e1 ^ (e24 + e36)
      a.set_term({1, 2, 3}, Rat(1));
      a.set_term({1, 4, 5}, Rat(1));
      b.set_term({1, 2, 4}, Rat(1));
      b.set_term({1, 3, 6}, Rat(1));
      break;
    case 2:
      // a_i ^ (e34 + e56) for a_1 = e1, a_2 = e2
      a.set_term({1, 3, 4}, Rat(1));
      a.set_term({1, 5, 6}, Rat(1));
      b.set_term({2, 3, 4}, Rat(1));
      b.set_term({2, 5, 6}, Rat(1));
      break;
    case 3:
      // e1 ^ (e2 ^ e5 + e3 ^ e4) and e2 ^ (e1 ^ e4 + e3 ^ e5)
      a.set_term({1, 2, 5}, Rat(1));
      a.set_term({1, 3, 4}, Rat(1));
      b.set_term({1, 2, 4}, Rat(-1));
      b.set_term({2, 3, 5}, Rat(1));
      break;
    default:
      throw std::invalid_argument("line_fixture: type must be 1, 2, or 3");
  }
  return {a, b};
}

}  // namespace exgr::fixtures
