#include "exgr/grass.hpp"

#include <stdexcept>

#include "exgr/poly.hpp"

namespace exgr {

PluckerPoint::PluckerPoint(const Multivector& w) : v_(normalize_projective(w)) {}

Center::Center(int n, int m, const Subspace& span) : n_(n), m_(m), span_(span) {
  if (m < 0 || m > n) throw std::invalid_argument("Center: bad grade");
  if (span.ambient() != binom(n, m))
    throw std::invalid_argument("Center: ambient dimension mismatch");
}

Center Center::from_spanning(int n, int m, const std::vector<Multivector>& gens) {
  if (gens.empty()) throw std::invalid_argument("Center: no generators");
  std::vector<std::vector<Rat>> rows;
  rows.reserve(gens.size());
  for (const Multivector& g : gens) {
    if (g.dim() != n || g.grade() != m)
      throw std::invalid_argument("Center: generator shape mismatch");
    rows.push_back(g.coords());
  }
  return Center(n, m, Subspace::span_of(rows));
}

std::vector<Multivector> Center::basis_multivectors() const {
  std::vector<Multivector> out;
  out.reserve(span_.dim());
  for (int i = 0; i < span_.dim(); ++i)
    out.push_back(Multivector::from_coords(n_, m_, span_.basis_row(i)));
  return out;
}

bool Center::contains(const Multivector& w) const {
  if (w.dim() != n_ || w.grade() != m_)
    throw std::invalid_argument("Center: shape mismatch");
  return span_.contains(w.coords());
}

Matrix two_form_matrix(const Multivector& sigma) {
  if (sigma.grade() != 2) throw std::invalid_argument("two_form_matrix: grade must be 2");
  const int n = sigma.dim();
  Matrix s(n, n);
  for (const auto& [idx, c] : sigma.terms()) {
    s.at(idx[0] - 1, idx[1] - 1) = c;
    s.at(idx[1] - 1, idx[0] - 1) = -c;
  }
  return s;
}

Multivector two_form_from_matrix(const Matrix& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("two_form_from_matrix: non-square");
  Multivector w(s.rows(), 2);
  for (int i = 0; i < s.rows(); ++i)
    for (int j = i + 1; j < s.cols(); ++j)
      if (!s.at(i, j).is_zero()) w.set_term({i + 1, j + 1}, s.at(i, j));
  return w;
}

SymplecticForm::SymplecticForm(const Multivector& sigma)
    : sigma_(sigma), s_(two_form_matrix(sigma)) {
  if (sigma.dim() % 2 != 0)
    throw std::domain_error("SymplecticForm: odd ambient dimension");
  if (pfaffian(s_).is_zero()) throw std::domain_error("SymplecticForm: degenerate form");
  s_inv_ = inverse(s_);
}

PluckerPoint pluecker(int n, const std::vector<std::vector<Rat>>& basis) {
  if (basis.empty()) throw std::invalid_argument("pluecker: empty basis");
  const Matrix m = Matrix::from_rows(basis);
  if (m.cols() != n) throw std::invalid_argument("pluecker: vector size mismatch");
  if (rank(m) != m.rows()) throw std::invalid_argument("pluecker: dependent vectors");
  Multivector w = Multivector::scalar(n, Rat(1));
  for (const auto& v : basis) w = wedge(w, Multivector::from_vector(n, v));
  return PluckerPoint(w);
}

PluckerPoint pluecker(const Subspace& s) {
  if (s.dim() == 0) throw std::invalid_argument("pluecker: zero subspace");
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < s.dim(); ++i) rows.push_back(s.basis_row(i));
  return pluecker(s.ambient(), rows);
}

std::optional<Subspace> is_decomposable(const Multivector& w) {
  if (w.is_zero()) throw std::invalid_argument("is_decomposable: zero multivector");
  const Subspace ker = kernel(wedge_map(w));
  if (ker.dim() != w.grade()) return std::nullopt;
  return ker;
}

Subspace skew_complement(const Subspace& l, const SymplecticForm& sigma) {
  if (l.ambient() != sigma.sigma().dim())
    throw std::invalid_argument("skew_complement: ambient mismatch");
  // w is skew-orthogonal to all of l iff (basis of l) * dual_matrix * w = 0.
  return kernel(l.basis() * sigma.dual_matrix());
}

std::vector<Rat> project(const Multivector& w, const Center& z) {
  if (w.dim() != z.n() || w.grade() != z.m())
    throw std::invalid_argument("project: shape mismatch");
  const std::vector<Rat> x = w.coords();
  const Matrix& b = z.span().basis();
  const RrefResult rr = rref(b);  // b is canonical already; reuse pivots
  std::vector<bool> is_pivot(b.cols(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Rat> reduced = x;
  for (int r = 0; r < rr.rank; ++r) {
    const Rat f = x[rr.pivots[r]];
    if (f.is_zero()) continue;
    for (int j = 0; j < b.cols(); ++j) reduced[j] -= f * b.at(r, j);
  }
  std::vector<Rat> quotient;
  quotient.reserve(b.cols() - rr.rank);
  for (int j = 0; j < b.cols(); ++j)
    if (!is_pivot[j]) quotient.push_back(reduced[j]);
  Rat lead(0);
  for (const Rat& q : quotient)
    if (!q.is_zero()) {
      lead = q;
      break;
    }
  if (lead.is_zero()) throw std::domain_error("project: point lies in the center");
  for (Rat& q : quotient) q /= lead;
  return quotient;
}

std::optional<Multivector> secant_meets_center(const PluckerPoint& l1,
                                               const PluckerPoint& l2,
                                               const Center& z) {
  if (l1 == l2) throw std::invalid_argument("secant_meets_center: equal points");
  const Subspace line = Subspace::span_of({l1.mv().coords(), l2.mv().coords()});
  const Subspace meet = intersect(line, z.span());
  if (meet.dim() == 0) return std::nullopt;
  if (meet.dim() > 1)
    throw std::domain_error("secant_meets_center: line lies inside the center");
  return Multivector::from_coords(z.n(), z.m(), meet.generator());
}

FiberResult fiber_partners(const PluckerPoint& l, const PluckerPoint& w) {
  const int n = l.dim();
  const int m = l.grade();
  if (w.dim() != n || w.grade() != m)
    throw std::invalid_argument("fiber_partners: shape mismatch");
  const auto l_plane = is_decomposable(l.mv());
  if (!l_plane) throw std::invalid_argument("fiber_partners: base point not decomposable");
  if (is_decomposable(w.mv()))
    throw std::invalid_argument("fiber_partners: center point is decomposable");

  // Restrict every decomposability quadric  (e*_J . p) ^ p = 0  to the pencil
  // p(t) = l + t w. Each restriction is divisible by t because l satisfies
  // the quadrics; the deflated coordinate polynomials are linear in t.
  std::vector<Poly> restrictions;
  const Multivector& lm = l.mv();
  const Multivector& wm = w.mv();
  for (const IndexSet& dual : wedge_basis(n, m - 1)) {
    const Multivector ul = contract_basis(dual, lm);
    const Multivector uw = contract_basis(dual, wm);
    const Multivector lin = wedge(ul, wm) + wedge(uw, lm);  // t-coefficient
    const Multivector quad = wedge(uw, wm);                 // t^2-coefficient
    if (lin.is_zero() && quad.is_zero()) continue;
    const std::vector<Rat> lc = lin.coords();
    const std::vector<Rat> qc = quad.coords();
    for (size_t k = 0; k < lc.size(); ++k) {
      if (lc[k].is_zero() && qc[k].is_zero()) continue;
      restrictions.push_back(Poly({lc[k], qc[k]}));
    }
  }
  if (restrictions.empty())
    throw std::logic_error("fiber_partners: pencil satisfies all quadrics");

  Poly g = restrictions[0];
  for (size_t i = 1; i + 0 < restrictions.size() && g.deg() > 0; ++i)
    g = poly_gcd(g, restrictions[i]);

  FiberResult out;
  if (g.deg() == 0) return out;
  const RootReport roots = rational_roots(g);
  out.nonrational_roots = roots.nonrational;
  for (const auto& [t0, mult] : roots.roots) {
    if (t0.is_zero()) {
      out.tangency_mult = mult;
      continue;
    }
    const Multivector p = lm + t0 * wm;
    const auto plane = is_decomposable(p);
    if (!plane)
      throw std::logic_error("fiber_partners: pencil root is not decomposable");
    out.partners.emplace_back(p);
    out.partner_planes.push_back(*plane);
  }
  return out;
}

}  // namespace exgr
