#pragma once

// Integral binary quartic forms a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4:
// invariants, GL2(Z) action and reduction to a canonical representative,
// enumeration of orbits with given invariants, and local/real-root tests.

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "moncubic/arith.hpp"
#include "moncubic/cubic_forms.hpp"

namespace moncubic {

struct BinaryQuarticForm {
  i128 a = 0, b = 0, c = 0, d = 0, e = 0;
  auto operator<=>(const BinaryQuarticForm&) const = default;
  std::string str() const;  // "[a,b,c,d,e]"
};

struct QuarticInvariants {
  i128 I = 0;
  i128 J = 0;
  auto operator<=>(const QuarticInvariants&) const = default;
};

// Substitution (x, y) -> (p x + q y, r x + s y).
struct Unimodular {
  i128 p = 1, q = 0, r = 0, s = 1;
  i128 det() const { return p * s - q * r; }
  Unimodular operator*(const Unimodular& o) const;  // (this then o) as substitutions
};

QuarticInvariants quartic_invariants(const BinaryQuarticForm& g);
// (4I^3 - J^2)/27.
i128 quartic_discriminant(const BinaryQuarticForm& g);

BinaryQuarticForm transform(const BinaryQuarticForm& g, const Unimodular& m);
BinaryQuarticForm negate(const BinaryQuarticForm& g);

// Complex roots of g(x, 1) (three when a = 0; the fourth is at infinity).
std::vector<std::complex<long double>> numeric_roots(const BinaryQuarticForm& g);

// Covariant point in the upper half plane: the minimizer of
// sum over roots alpha of log((x - Re alpha)^2 + (Im alpha)^2 + t^2) - 4 log t.
std::complex<long double> covariant_point(const BinaryQuarticForm& g);

// Canonical representative of the GL2(Z) orbit of g. Requires disc(g) != 0.
BinaryQuarticForm reduce(const BinaryQuarticForm& g);

bool has_linear_factor(const BinaryQuarticForm& g);
bool is_irreducible_quartic(const BinaryQuarticForm& g);
// Real roots of g on P^1(R); 0, 2 or 4.
int real_root_count(const BinaryQuarticForm& g);

// g is congruent to a scalar times the square of a quadratic form mod p.
bool is_overramified_at(const BinaryQuarticForm& g, std::uint64_t p);
// Primes dividing disc(g) at which g is overramified. disc_factors must be
// a complete factorization of disc(g).
std::vector<std::uint64_t> overramified_primes(const BinaryQuarticForm& g, const Factorization& disc_factors);
bool nowhere_overramified(const BinaryQuarticForm& g, const Factorization& disc_factors);
// Throws std::runtime_error when disc(g) does not factor completely.
bool nowhere_overramified(const BinaryQuarticForm& g);

// Maximality at p of the ring attached to a binary form (coefficients from
// x^n down to y^n): not maximal iff the form vanishes mod p, or it has a
// multiple root mod p at which it vanishes mod p^2.
bool binary_form_maximal_at(const std::vector<i128>& coeffs, std::uint64_t p);
bool ring_maximal_at(const BinaryQuarticForm& g, std::uint64_t p);

struct QuarticOrbit {
  BinaryQuarticForm rep;
  bool irreducible = false;
  bool nowhere_overramified = false;
  // The attached quartic ring is maximal at every p with p^2 | disc.
  bool ring_maximal = false;
  int real_roots = 0;
  std::vector<std::uint64_t> overramified_at;
};

struct QuarticOrbitSet {
  QuarticInvariants invariants;
  // One entry per orbit of forms without a rational linear factor,
  // sorted by representative.
  std::vector<QuarticOrbit> orbits;
};

class BoundOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OrbitSearchOptions {
  // Coefficient bounds for c, d, e of a reduced representative are
  // k * safety * H^(1/6), H = max(|I|^3, J^2/4).
  double k_c = 1.6;
  double k_d = 1.0;
  double k_e = 0.7;
  double safety = 2.0;
  // Largest (c, d, e) box allowed before BoundOverflow.
  std::uint64_t max_box = 2'000'000'000ULL;
};

struct SearchBox {
  i128 C = 0, D = 0, E = 0;
};
SearchBox search_box(i128 I, i128 J, const OrbitSearchOptions& opt = {});

// Forms g with invariants (I, J), e != 0, |c| <= C, 0 <= d <= D, |e| <= E,
// and no rational linear factor. The other coefficients are solved for.
std::vector<BinaryQuarticForm> forms_in_box(i128 I, i128 J, const SearchBox& box);

// disc_factors (complete) is only used for the per-orbit flags.
QuarticOrbitSet orbits_with_invariants(i128 I, i128 J, const Factorization& disc_factors,
                                       const OrbitSearchOptions& opt = {});
QuarticOrbitSet orbits_with_invariants(i128 I, i128 J, const OrbitSearchOptions& opt = {});

}  // namespace moncubic
