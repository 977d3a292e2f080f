#pragma once

// 2-parts of the class group and narrow class group of a monogenized cubic
// field, by counting binary quartic orbits and by a direct relation-lattice
// computation, plus the comparison of the two.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "moncubic/number_field.hpp"
#include "moncubic/quartic_forms.hpp"

namespace moncubic {

struct DirectOptions {
  int max_radius = 14;                   // coordinate box in the reduced basis
  std::uint64_t min_factor_base = 60;    // factor base primes up to max(Minkowski, this)
  std::uint64_t euler_bound = 50'000;    // primes in the analytic h R estimate
  long double disc_ceiling = 1e10;
  long double window = 1.41421356237L;   // accepted ratio of h R to the analytic value
};

struct DirectClassGroup {
  bool determinate = false;
  std::string reason;  // why not determinate
  std::vector<PrimeIdeal> factor_base;
  // Hermite normal form of the relation lattice (upper triangular).
  std::vector<std::vector<mpz_class>> relation_matrix;
  // Elementary divisors > 1.
  std::vector<mpz_class> snf_diagonal;
  i128 h = 0;
  int two_part = 0;         // #Cl / 2 Cl
  int narrow_two_part = 0;  // #Cl+ / 2 Cl+
  long double regulator = 0;
  long double analytic_hr = 0;
  std::size_t relations = 0;
  std::size_t units_found = 0;
};

DirectClassGroup direct_class_group(const MonicCubicForm& f, const DirectOptions& opt = {});
// #Cl+ / 2Cl+ from a determinate direct computation; f totally real.
int narrow_two_part_direct(const MonicCubicForm& f, const DirectClassGroup& dcg);

struct QuarticClassCounts {
  int cl2 = 0;
  int cl2_plus = 0;
  // Same counts, additionally requiring the quartic ring to be maximal.
  int cl2_strict = 0;
  int cl2_plus_strict = 0;
  QuarticOrbitSet orbits;
};

// f maximal and irreducible.
QuarticClassCounts quartic_class_counts(const MonicCubicForm& f, const OrbitSearchOptions& opt = {});
int cl2_plus_via_quartics(const MonicCubicForm& f, const OrbitSearchOptions& opt = {});
int cl2_via_quartics(const MonicCubicForm& f, const OrbitSearchOptions& opt = {});

enum class ClassMethod { Quartic, Direct, BothAgree, BothDisagree };
std::string_view to_string(ClassMethod m);

struct Discrepancy {
  int quartic_cl2 = 0, quartic_cl2_plus = 0;
  int direct_cl2 = 0;
  std::optional<int> direct_cl2_plus;
  std::string note;
};

struct TwoClassData {
  int cl2_size = 0;
  int cl2_plus_size = 0;
  ClassMethod method = ClassMethod::Quartic;
  std::optional<Discrepancy> discrepancy;
  bool direct_determinate = false;
  // The mod-p-only and ring-maximal quartic counts differ.
  bool convention_split = false;
};

TwoClassData cross_validate(const MonicCubicForm& f, const OrbitSearchOptions& qopt = {},
                            const DirectOptions& dopt = {});

}  // namespace moncubic
