#include "exgr/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace exgr {

Rat::Rat(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  v_.canonicalize();
}

Rat Rat::ratio(long num, long den) {
  return Rat(BigInt(static_cast<signed long>(num)),
             BigInt(static_cast<signed long>(den)));
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat: malformed rational '" + s + "'");
  }
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

}  // namespace exgr
