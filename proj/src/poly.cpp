#include "exgr/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace exgr {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int degree) {
  if (degree < 0) throw std::invalid_argument("Poly: negative degree");
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::variable() { return monomial(Rat(1), 1); }

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[k];
}

Rat Poly::lead() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rat(static_cast<long>(k)) * c_[k];
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rat& c, const Poly& p) {
  if (c.is_zero()) return Poly();
  std::vector<Rat> v(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) v[i] = c * p.c_[i];
  return Poly(std::move(v));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = deg(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[k].str() << ")";
    if (k >= 1) os << "*t";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

PolyDivMod poly_divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("poly_divmod: zero divisor");
  Poly rem = f;
  std::vector<Rat> quot;
  if (f.deg() >= g.deg()) quot.assign(f.deg() - g.deg() + 1, Rat(0));
  const Rat glead = g.lead();
  while (!rem.is_zero() && rem.deg() >= g.deg()) {
    const int shift = rem.deg() - g.deg();
    const Rat c = rem.lead() / glead;
    quot[shift] = c;
    rem = rem - Poly::monomial(c, shift) * g;
  }
  return {Poly(std::move(quot)), rem};
}

Poly poly_divexact(const Poly& f, const Poly& g) {
  auto [q, r] = poly_divmod(f, g);
  if (!r.is_zero()) throw std::domain_error("poly_divexact: inexact division");
  return q;
}

namespace {

// Integer polynomial helpers for the primitive PRS.
using ZPoly = std::vector<BigInt>;  // low first, no trailing zeros

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly to_primitive_int(const Poly& f) {
  if (f.is_zero()) return {};
  BigInt l = 1;
  for (const Rat& c : f.coeffs()) {
    BigInt d = c.den();
    BigInt g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  ZPoly z(f.coeffs().size());
  BigInt content = 0;
  for (size_t i = 0; i < z.size(); ++i) {
    z[i] = f.coeffs()[i].num() * (l / f.coeffs()[i].den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
  }
  for (auto& c : z) c /= content;
  return z;
}

void make_primitive(ZPoly& p) {
  ztrim(p);
  if (p.empty()) return;
  BigInt content = 0;
  for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (auto& c : p) c /= content;
  if (p.back() < 0)
    for (auto& c : p) c = -c;
}

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f  mod g.
ZPoly pseudo_rem(ZPoly f, const ZPoly& g) {
  const int dg = static_cast<int>(g.size()) - 1;
  const BigInt& lg = g.back();
  while (static_cast<int>(f.size()) - 1 >= dg && !f.empty()) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const BigInt lf = f.back();
    for (auto& c : f) c *= lg;
    for (int i = 0; i <= dg; ++i) f[shift + i] -= lf * g[i];
    ztrim(f);
  }
  return f;
}

Poly from_int_monic(const ZPoly& z) {
  std::vector<Rat> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = Rat(z[i], z.back());
  return Poly(std::move(c));
}

BigInt isqrt_exact(const BigInt& n, bool& ok) {
  BigInt r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  ok = (rem == 0);
  return r;
}

std::vector<BigInt> divisors(const BigInt& n_in) {
  BigInt n = ::abs(n_in);
  std::vector<BigInt> ds;
  BigInt d = 1;
  while (d * d <= n) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d * d != n) ds.push_back(n / d);
    }
    ++d;
  }
  return ds;
}

}  // namespace

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("poly_gcd: both zero");
  if (f.is_zero()) return Rat(1) / g.lead() * g;
  if (g.is_zero()) return Rat(1) / f.lead() * f;
  ZPoly a = to_primitive_int(f), b = to_primitive_int(g);
  if (static_cast<int>(a.size()) < static_cast<int>(b.size())) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_rem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return from_int_monic(a);
}

bool poly_proportional(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.deg() != g.deg()) return false;
  const Rat c = f.lead() / g.lead();
  return f == c * g;
}

RootReport rational_roots(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  std::map<Rat, int> roots;
  Poly rem = f;
  // Factor out powers of t.
  while (rem.coeff(0).is_zero() && rem.deg() >= 1) {
    roots[Rat(0)]++;
    std::vector<Rat> shifted(rem.coeffs().begin() + 1, rem.coeffs().end());
    rem = Poly(std::move(shifted));
  }
  auto strip_root = [&](const Rat& r) {
    const Poly lin(std::vector<Rat>{-r, Rat(1)});
    while (rem.deg() >= 1 && rem.eval(r).is_zero()) {
      roots[r]++;
      rem = poly_divexact(rem, lin);
    }
  };
  while (rem.deg() == 1 || rem.deg() == 2) {
    if (rem.deg() == 1) {
      strip_root(-rem.coeff(0) / rem.coeff(1));
      continue;
    }
    // Quadratic: rational roots exist iff the discriminant is a perfect square.
    const Rat a = rem.coeff(2), b = rem.coeff(1), c = rem.coeff(0);
    const Rat disc = b * b - Rat(4) * a * c;
    if (disc.sign() < 0) break;
    bool num_ok = false, den_ok = false;
    const BigInt sn = isqrt_exact(disc.num(), num_ok);
    const BigInt sd = isqrt_exact(disc.den(), den_ok);
    if (!num_ok || !den_ok) break;
    const Rat s(sn, sd);
    strip_root((-b + s) / (Rat(2) * a));
    if (!s.is_zero() && rem.deg() >= 1) strip_root((-b - s) / (Rat(2) * a));
    break;
  }
  if (rem.deg() >= 3) {
    const ZPoly z = to_primitive_int(rem);
    for (const BigInt& p : divisors(z.front())) {
      for (const BigInt& q : divisors(z.back())) {
        for (int sign : {1, -1}) {
          const Rat cand(sign < 0 ? BigInt(-p) : p, q);
          strip_root(cand);
        }
      }
    }
  }
  RootReport out;
  out.roots.assign(roots.begin(), roots.end());
  int found = 0;
  for (const auto& [r, m] : out.roots) found += m;
  out.nonrational = f.deg() - found;
  return out;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = poly_gcd(num_, den_);
  num_ = poly_divexact(num_, g);
  den_ = poly_divexact(den_, g);
  const Rat l = den_.lead();
  num_ = Rat(1) / l * num_;
  den_ = Rat(1) / l * den_;
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace exgr
