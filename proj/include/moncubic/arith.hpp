#pragma once

// Elementary arithmetic: primes, integer factorization with a step budget,
// modular arithmetic and dense polynomials over F_p.

#include <cstdint>
#include <utility>
#include <vector>

#include "moncubic/int128.hpp"

namespace moncubic {

inline std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(x) * y % m);
}
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
// Inverse of x modulo m; requires gcd(x, m) = 1.
std::uint64_t invmod(std::uint64_t x, std::uint64_t m);
// x mod m as a value in [0, m).
std::uint64_t reduce_mod(i128 x, std::uint64_t m);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

struct Factorization {
  std::vector<std::pair<std::uint64_t, int>> factors;  // ascending primes
  // Product of the factors times `cofactor` is |n|. complete <=> cofactor == 1.
  u128 cofactor = 1;
  bool complete() const { return cofactor == 1; }
  int exponent_of(std::uint64_t p) const;
};

struct FactorOptions {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_step_budget = 2'000'000;
};

// Trial division then Pollard rho (Brent). Cofactors above 2^64 or that
// exhaust the rho budget are left in `cofactor`.
Factorization factor(i128 n, const FactorOptions& opt = {});

// Exponent of p in n (n != 0).
int valuation(i128 n, std::uint64_t p);

// Divisors of |n| (n != 0) from a complete factorization.
std::vector<i128> positive_divisors(const Factorization& f);

// Dense polynomial over F_p, coefficient i is the x^i coefficient, no
// trailing zeros (the zero polynomial is empty).
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::vector<std::uint64_t> coeffs, std::uint64_t p);
  static FpPoly from_integers(const std::vector<i128>& coeffs, std::uint64_t p);
  static FpPoly x(std::uint64_t p);
  static FpPoly constant(std::uint64_t c, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::uint64_t coeff(int i) const { return i < static_cast<int>(c_.size()) && i >= 0 ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(std::uint64_t s) const;
  FpPoly monic() const;
  FpPoly derivative() const;
  std::uint64_t eval(std::uint64_t x) const;

  // Euclidean division; divisor must be nonzero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly operator%(const FpPoly& d) const { return divmod(d).second; }
  FpPoly operator/(const FpPoly& d) const { return divmod(d).first; }
  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

 private:
  void trim();
  std::vector<std::uint64_t> c_;
  std::uint64_t p_ = 2;
};

FpPoly gcd(FpPoly a, FpPoly b);  // monic (or zero)
// base^e mod m.
FpPoly powmod(const FpPoly& base, u128 e, const FpPoly& m);
// Product of the distinct monic irreducible factors of f (f nonzero).
FpPoly radical(const FpPoly& f);
// Number of distinct roots of f in F_p (f nonzero).
int distinct_root_count(const FpPoly& f);
// All roots of f in F_p with multiplicity (f nonzero), ascending.
std::vector<std::pair<std::uint64_t, int>> roots_with_multiplicity(const FpPoly& f);

// Dedekind's criterion: is Z_p[x]/(F) maximal, for F monic in Z[x]?
bool dedekind_maximal(const std::vector<i128>& monic_coeffs, std::uint64_t p);

}  // namespace moncubic
