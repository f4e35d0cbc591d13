#include "exgr/syscon.hpp"

#include <stdexcept>

#include "exgr/rng.hpp"

namespace exgr {

void validate(const Realization& s) {
  if (s.a.rows() != s.a.cols()) throw std::invalid_argument("Realization: a not square");
  if (s.b.rows() != s.a.rows()) throw std::invalid_argument("Realization: b row mismatch");
  if (s.c.cols() != s.a.rows()) throw std::invalid_argument("Realization: c col mismatch");
}

TransferFunction transfer_function(const Realization& s) {
  validate(s);
  const Resolvent res = resolvent(s.a);
  return TransferFunction{s.c * res.adjugate * s.b, res.charpoly};
}

HermannMartinCurve hermann_martin(const Realization& s) {
  validate(s);
  const int m = s.inputs();
  const int p = s.outputs();
  const int n = m + p;
  const TransferFunction tf = transfer_function(s);
  PolyMatrix stacked(n, m);
  for (int i = 0; i < m; ++i) stacked.at(i, i) = tf.den;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < m; ++j) stacked.at(m + i, j) = tf.num.at(i, j);

  const auto& basis = wedge_basis(n, m);
  std::vector<Poly> minors(basis.size());
  Poly content;
  for (size_t k = 0; k < basis.size(); ++k) {
    PolyMatrix sub(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) sub.at(r, c) = stacked.at(basis[k][r] - 1, c);
    minors[k] = det(sub);
    if (!minors[k].is_zero())
      content = content.is_zero() ? minors[k] : poly_gcd(content, minors[k]);
  }
  if (content.is_zero()) throw std::logic_error("hermann_martin: zero curve");
  int max_deg = 0;
  for (auto& q : minors) {
    if (q.is_zero()) continue;
    q = poly_divexact(q, content);
    max_deg = std::max(max_deg, q.deg());
  }
  HermannMartinCurve curve;
  curve.n = n;
  curve.m = m;
  for (int d = 0; d <= max_deg; ++d) {
    Multivector w(n, m);
    for (size_t k = 0; k < basis.size(); ++k)
      if (!minors[k].coeff(d).is_zero()) w.set_term(basis[k], minors[k].coeff(d));
    curve.coeffs.push_back(std::move(w));
  }
  while (curve.coeffs.size() > 1 && curve.coeffs.back().is_zero()) curve.coeffs.pop_back();
  return curve;
}

PpCenter pp_center(const Realization& s, std::uint64_t seed) {
  const HermannMartinCurve curve = hermann_martin(s);
  const int n = curve.n;
  const int m = curve.m;
  const int p = n - m;
  std::vector<std::vector<Rat>> rows;
  for (const Multivector& w : curve.coeffs)
    if (!w.is_zero()) rows.push_back(w.coords());
  const Subspace x = Subspace::span_of(rows);

  // Annihilator in the complementary wedge power under the top pairing.
  const auto& basis_p = wedge_basis(n, p);
  Matrix pairing(x.dim(), static_cast<int>(basis_p.size()));
  for (int i = 0; i < x.dim(); ++i) {
    const Multivector xi = Multivector::from_coords(n, m, x.basis_row(i));
    for (size_t j = 0; j < basis_p.size(); ++j)
      pairing.at(i, static_cast<int>(j)) =
          top_pairing(xi, Multivector::basis_element(n, basis_p[j]));
  }
  PpCenter out{x, Center(n, p, kernel(pairing)), false, std::nullopt};

  if (out.z.dim() == 0) return out;  // not proper: empty center
  std::vector<Multivector> samples = out.z.basis_multivectors();
  Lcg64 rng(seed);
  for (int t = 0; t < 20; ++t) {
    Multivector w(n, p);
    while (w.is_zero()) {
      w = Multivector(n, p);
      for (int i = 0; i < out.z.dim(); ++i) {
        const Rat c(rng.next_int(-9, 9));
        if (c.is_zero()) continue;
        w = w + c * Multivector::from_coords(n, p, out.z.span().basis_row(i));
      }
    }
    samples.push_back(std::move(w));
  }
  for (const Multivector& w : samples) {
    if (is_decomposable(w)) {
      out.decomposable_witness = w;
      return out;
    }
  }
  out.proper = true;
  return out;
}

Poly pole_placement_poly(const Realization& s, const Matrix& k) {
  validate(s);
  if (k.rows() != s.inputs() || k.cols() != s.outputs())
    throw std::invalid_argument("pole_placement_poly: gain shape mismatch");
  return char_poly(s.a + s.b * k * s.c);
}

Realization feedback_transform(const Realization& s, const Matrix& r, const Matrix& w,
                               const Matrix& t, const Matrix& q) {
  validate(s);
  if (q.rows() != s.inputs() || q.cols() != s.outputs())
    throw std::invalid_argument("feedback_transform: q shape mismatch");
  const Matrix r_inv = inverse(r);
  const Matrix t_inv = inverse(t);
  inverse(w);  // reject singular input scaling
  Realization out;
  out.a = r_inv * (s.a + s.b * q * t_inv * s.c) * r;
  out.b = r_inv * s.b * w;
  out.c = t_inv * s.c * r;
  return out;
}

bool is_symmetric(const Realization& s) {
  validate(s);
  if (s.inputs() != s.outputs())
    throw std::invalid_argument("is_symmetric: inputs and outputs differ");
  return s.a == s.a.transpose() && s.c == s.b.transpose();
}

bool is_controllable(const Realization& s) {
  validate(s);
  const int n = s.states();
  Matrix block(n, n * s.inputs());
  Matrix cur = s.b;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < s.inputs(); ++j) block.at(i, k * s.inputs() + j) = cur.at(i, j);
    cur = s.a * cur;
  }
  return rank(block) == n;
}

bool is_observable(const Realization& s) {
  Realization dual{s.a.transpose(), s.c.transpose(), s.b.transpose()};
  return is_controllable(dual);
}

bool is_minimal(const Realization& s) { return is_controllable(s) && is_observable(s); }

Matrix curve_equivalence_matrix(const Matrix& w, const Matrix& t, const Matrix& q) {
  const int m = w.rows();
  const int p = t.rows();
  if (q.rows() != m || q.cols() != p)
    throw std::invalid_argument("curve_equivalence_matrix: q shape mismatch");
  const Matrix w_inv = inverse(w);
  const Matrix t_inv = inverse(t);
  const Matrix top_right = Rat(-1) * (w_inv * q * t_inv);
  Matrix g(m + p, m + p);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g.at(i, j) = w_inv.at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < p; ++j) g.at(i, m + j) = top_right.at(i, j);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) g.at(m + i, m + j) = t_inv.at(i, j);
  return g;
}

HermannMartinCurve transform_curve(const Matrix& g, const HermannMartinCurve& curve) {
  HermannMartinCurve out;
  out.n = curve.n;
  out.m = curve.m;
  for (const Multivector& w : curve.coeffs) out.coeffs.push_back(apply_gl(g, w));
  while (out.coeffs.size() > 1 && out.coeffs.back().is_zero()) out.coeffs.pop_back();
  return out;
}

bool curves_proportional(const HermannMartinCurve& a, const HermannMartinCurve& b) {
  if (a.n != b.n || a.m != b.m || a.coeffs.size() != b.coeffs.size()) return false;
  // One global scalar across all coefficient multivectors.
  Rat factor(0);
  for (size_t k = 0; k < a.coeffs.size(); ++k) {
    const Multivector& x = a.coeffs[k];
    const Multivector& y = b.coeffs[k];
    if (x.is_zero() != y.is_zero()) return false;
    if (x.is_zero()) continue;
    if (!proportional(x, y)) return false;
    const Rat c = x.terms().begin()->second / y.coeff(x.terms().begin()->first);
    if (factor.is_zero())
      factor = c;
    else if (factor != c)
      return false;
  }
  return !factor.is_zero();
}

Poly curve_pairing(const HermannMartinCurve& curve, const Multivector& w) {
  std::vector<Rat> coeffs;
  coeffs.reserve(curve.coeffs.size());
  for (const Multivector& c : curve.coeffs) coeffs.push_back(top_pairing(c, w));
  return Poly(std::move(coeffs));
}

}  // namespace exgr
