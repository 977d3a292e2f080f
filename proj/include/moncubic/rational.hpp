#pragma once

// Exact rationals over checked 128-bit integers, always in lowest terms
// with a positive denominator.

#include <compare>
#include <string>

#include "moncubic/int128.hpp"

namespace moncubic {

class Rational {
 public:
  Rational() = default;
  Rational(i128 num) : num_(num) {}  // NOLINT: implicit from integers is intended
  Rational(i128 num, i128 den);

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  long double to_long_double() const { return static_cast<long double>(num_) / static_cast<long double>(den_); }
  // "p/q", or "p" for integers.
  std::string str() const;
  static Rational parse(const std::string& s);

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

}  // namespace moncubic
