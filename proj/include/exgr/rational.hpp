#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace exgr {

using BigInt = mpz_class;

/// Exact rational scalar. Thin wrapper over GMP's mpq_class that always
/// materializes arithmetic results (no expression templates escape) and keeps
/// the canonical form: lowest terms, denominator > 0.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                      // NOLINT: implicit by design
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(const BigInt& n) : v_(n) {}            // NOLINT
  Rat(const BigInt& num, const BigInt& den);

  /// num/den with canonicalization; throws std::invalid_argument on den == 0.
  static Rat ratio(long num, long den);
  /// Parses "p/q" or "p" (arbitrary precision). Throws on malformed input.
  static Rat parse(const std::string& s);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Canonical string form "p/q" (q > 0, lowest terms), e.g. "-3/2", "5/1".
  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws std::domain_error on division by 0

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

Rat abs(const Rat& a);

}  // namespace exgr
