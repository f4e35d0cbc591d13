#pragma once

#include <utility>
#include <vector>

#include "exgr/rational.hpp"

namespace exgr {

/// Univariate polynomial over Rat, coefficients stored low degree first.
/// The zero polynomial has an empty coefficient list; nonzero polynomials
/// never carry trailing zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int degree);
  static Poly variable();  // t

  int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;  // 0 beyond stored range
  Rat lead() const;        // 0 for the zero polynomial
  bool is_monic() const { return !c_.empty() && lead() == Rat(1); }

  Rat eval(const Rat& x) const;
  Poly derivative() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

  std::string str() const;  // human-readable, for diagnostics

 private:
  void trim();
  std::vector<Rat> c_;
};

struct PolyDivMod {
  Poly quot;
  Poly rem;
};

/// Exact division with remainder over the rationals. Throws on zero divisor.
PolyDivMod poly_divmod(const Poly& f, const Poly& g);

/// Exact quotient; throws std::domain_error if the remainder is nonzero.
Poly poly_divexact(const Poly& f, const Poly& g);

/// Monic greatest common divisor (primitive PRS over the integers inside).
/// Throws if both arguments are zero.
Poly poly_gcd(const Poly& f, const Poly& g);

/// True iff f == c*g for some nonzero scalar c (zero matches only zero).
bool poly_proportional(const Poly& f, const Poly& g);

struct RootReport {
  std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity), ascending
  int nonrational = 0;                     // deg(f) minus total found multiplicity
};

/// All rational roots with multiplicities. Throws on the zero polynomial.
RootReport rational_roots(const Poly& f);

/// Rational function num/den in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(1)) {}
  RatFunc(Poly num, Poly den);  // throws std::domain_error on zero denominator
  static RatFunc from_poly(const Poly& p) { return RatFunc(p, Poly::constant(1)); }
  static RatFunc constant(const Rat& c) { return from_poly(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Poly::constant(1); }

  RatFunc derivative() const;
  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace exgr
