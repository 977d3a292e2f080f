#include "moncubic/rational.hpp"

#include <stdexcept>

namespace moncubic {

Rational::Rational(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational Rational::operator+(const Rational& o) const {
  i128 g = gcd128(den_, o.den_);
  i128 d1 = den_ / g;
  return Rational(checked_add(checked_mul(num_, o.den_ / g), checked_mul(o.num_, d1)), checked_mul(d1, o.den_));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  i128 g1 = gcd128(num_, o.den_);
  i128 g2 = gcd128(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  return *this * Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  i128 lhs = checked_mul(num_, o.den_);
  i128 rhs = checked_mul(o.num_, den_);
  return lhs <=> rhs;
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_i128(s));
  return Rational(parse_i128(s.substr(0, slash)), parse_i128(s.substr(slash + 1)));
}

}  // namespace moncubic
