#include "exgr/wronski.hpp"

#include <stdexcept>

#include "exgr/polymatrix.hpp"

namespace exgr {

Poly wronskian(const std::vector<Poly>& fs) {
  if (fs.empty()) throw std::invalid_argument("wronskian: need at least one function");
  const int m = static_cast<int>(fs.size());
  PolyMatrix d(m, m);
  for (int j = 0; j < m; ++j) {
    Poly cur = fs[j];
    for (int i = 0; i < m; ++i) {
      d.at(i, j) = cur;
      cur = cur.derivative();
    }
  }
  return det(d);
}

bool operator==(const Odo& a, const Odo& b) {
  return a.order == b.order && a.coeffs == b.coeffs;
}

namespace {

Rat binom_rat(int n, int k) { return Rat(binom(n, k)); }

void check_odo(const Odo& l) {
  if (l.order < 1) throw std::invalid_argument("Odo: order must be positive");
  if (static_cast<int>(l.coeffs.size()) != l.order)
    throw std::invalid_argument("Odo: coefficient count mismatch");
}

}  // namespace

Odo formal_adjoint(const Odo& l) {
  check_odo(l);
  const int n = l.order;
  // (-1)^n x^(n) + sum_i (-1)^i (a_i x)^(i), collected on derivatives of x.
  std::vector<RatFunc> b(n + 1);
  b[n] = RatFunc::constant(n % 2 == 0 ? 1 : -1);
  for (int i = 0; i < n; ++i) {
    const Rat sign(i % 2 == 0 ? 1 : -1);
    RatFunc der = l.coeffs[i];
    for (int k = 0; k <= i; ++k) {
      // contributes sign * C(i,k) * a_i^(k) to the coefficient of x^(i-k)
      b[i - k] = b[i - k] + RatFunc::constant(sign * binom_rat(i, k)) * der;
      der = der.derivative();
    }
  }
  const RatFunc lead = RatFunc::constant(n % 2 == 0 ? 1 : -1);
  Odo out;
  out.order = n;
  out.coeffs.resize(n);
  for (int j = 0; j < n; ++j) out.coeffs[j] = lead * b[j];
  return out;
}

Odo mu_conjugate(const Odo& l, const RatFunc& mu) {
  check_odo(l);
  if (mu.is_zero()) throw std::invalid_argument("mu_conjugate: mu must be nonzero");
  const int n = l.order;
  // (1/mu) sum_i a_i (mu x)^(i) with a_n = 1, expanded by the Leibniz rule.
  std::vector<RatFunc> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    const RatFunc ai = (i == n) ? RatFunc::constant(1) : l.coeffs[i];
    if (ai.is_zero()) continue;
    RatFunc der = mu;
    for (int k = 0; k <= i; ++k) {
      c[i - k] = c[i - k] + RatFunc::constant(binom_rat(i, k)) * ai * der;
      der = der.derivative();
    }
  }
  Odo out;
  out.order = n;
  out.coeffs.resize(n);
  for (int j = 0; j < n; ++j) out.coeffs[j] = c[j] / mu;
  if (c[n] / mu != RatFunc::constant(1))
    throw std::logic_error("mu_conjugate: leading coefficient not restored");
  return out;
}

bool is_self_adjoint_op(const Odo& l) {
  check_odo(l);
  if (l.order % 2 != 0) return false;
  return formal_adjoint(l) == l;
}

CenterBuild build_center(const std::vector<Poly>& fs, int m) {
  const int n = static_cast<int>(fs.size());
  if (n < 1) throw std::invalid_argument("build_center: empty fundamental system");
  if (m < 1 || m > n - 1) throw std::invalid_argument("build_center: m out of range");
  if (wronskian(fs).is_zero())
    throw std::invalid_argument("build_center: fundamental system is dependent");

  // Coordinates of the curve are the m x m Wronskian minors.
  const auto& basis = wedge_basis(n, m);
  std::vector<Poly> minors;
  minors.reserve(basis.size());
  int max_deg = 0;
  for (const IndexSet& idx : basis) {
    std::vector<Poly> sub;
    sub.reserve(m);
    for (int i : idx) sub.push_back(fs[i - 1]);
    minors.push_back(wronskian(sub));
    max_deg = std::max(max_deg, minors.back().deg());
  }
  std::vector<std::vector<Rat>> rows;
  for (int d = 0; d <= max_deg; ++d) {
    std::vector<Rat> row(basis.size());
    bool nonzero = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      row[k] = minors[k].coeff(d);
      nonzero = nonzero || !row[k].is_zero();
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  const Subspace x = Subspace::span_of(rows);
  const Subspace zspan = kernel(x.basis());
  return CenterBuild{x, Center(n, m, zspan)};
}

BigInt schubert_degree(int m, int n) {
  if (m < 1 || m >= n) throw std::invalid_argument("schubert_degree: need 1 <= m < n");
  auto factorial = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  BigInt num = factorial(m * (n - m));
  for (int k = 1; k <= n - m - 1; ++k) num *= factorial(k);
  BigInt den = 1;
  for (int k = m; k <= n - 1; ++k) den *= factorial(k);
  if (num % den != 0) throw std::logic_error("schubert_degree: non-integer quotient");
  return num / den;
}

Poly wronski_map(const std::vector<Poly>& fs, const Subspace& plane) {
  const int n = static_cast<int>(fs.size());
  if (plane.ambient() != n)
    throw std::invalid_argument("wronski_map: plane ambient mismatch");
  if (plane.dim() < 1) throw std::invalid_argument("wronski_map: zero plane");
  std::vector<Poly> picked;
  picked.reserve(plane.dim());
  for (int i = 0; i < plane.dim(); ++i) {
    Poly g;
    for (int j = 0; j < n; ++j) g = g + plane.basis().at(i, j) * fs[j];
    picked.push_back(std::move(g));
  }
  return wronskian(picked);
}

}  // namespace exgr
