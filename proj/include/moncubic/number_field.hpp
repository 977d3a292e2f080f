#pragma once

// The cubic field K = Q(theta), f(theta) = 0, with O_K = Z[theta] (f maximal).
// Elements are integer triples (x, y, z) = x + y theta + z theta^2.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "moncubic/local_analysis.hpp"
#include "moncubic/orders.hpp"

namespace moncubic {

using Element = std::array<i128, 3>;

struct PrimeIdeal {
  std::uint64_t p = 0;
  int e = 1;  // ramification index
  int f = 1;  // residue degree
  // theta mod the prime, for degree-one primes.
  std::uint64_t root = 0;
  bool has_root = false;
};

class CubicField {
 public:
  // f must be irreducible with Z[theta] maximal.
  explicit CubicField(const MonicCubicForm& f);

  const MonicCubicForm& form() const { return f_; }
  i128 disc() const { return disc_; }
  int r1() const { return r1_; }
  int r2() const { return r2_; }

  Element mul(const Element& x, const Element& y) const;
  // Exact norm (determinant of multiplication).
  i128 norm(const Element& x) const;

  // theta under the real embeddings, then one of each complex pair.
  const std::vector<std::complex<long double>>& embeddings() const { return emb_; }
  // log|sigma(x)| for real sigma and 2 log|sigma(x)| for complex sigma.
  std::vector<long double> log_embedding(const Element& x) const;
  // Bit i set when x is negative under the i-th real embedding.
  unsigned sign_vector(const Element& x) const;

  // LLL-reduced Z-basis of O_K for the Minkowski embedding.
  const std::array<Element, 3>& reduced_basis() const { return basis_; }

  std::vector<PrimeIdeal> primes_above(std::uint64_t p) const;
  long double minkowski_bound() const;
  // h * R from the analytic class number formula, with the Euler product
  // for L(1, rho) = zeta_K / zeta truncated at primes <= prime_bound.
  long double analytic_hr(std::uint64_t prime_bound) const;

 private:
  MonicCubicForm f_;
  i128 disc_ = 0;
  int r1_ = 0, r2_ = 0;
  std::vector<std::complex<long double>> emb_;
  std::array<Element, 3> basis_{};

  std::complex<long double> evaluate(const Element& x, std::complex<long double> t) const;
  void reduce_basis();
};

}  // namespace moncubic
