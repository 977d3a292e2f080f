#pragma once

// Local structure of Q_v[x]/(f(x,1)): the five etale cubic types over Q_p,
// local 2-torsion and unramified-cohomology sizes, local masses of the two
// Selmer structures used for class groups, and family specifications.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "moncubic/orders.hpp"
#include "moncubic/rational.hpp"

namespace moncubic {

enum class EtaleType { Split, UnramQuad, UnramCubic, RamQuad, RamCubic };

inline constexpr EtaleType kAllEtaleTypes[] = {EtaleType::Split, EtaleType::UnramQuad, EtaleType::UnramCubic,
                                               EtaleType::RamQuad, EtaleType::RamCubic};

std::string_view to_string(EtaleType t);
EtaleType parse_etale_type(std::string_view s);

// A place of Q: a prime, or the infinite place (prime == 0).
struct Place {
  std::uint64_t prime = 0;
  static Place infinity() { return {0}; }
  static Place finite(std::uint64_t p) { return {p}; }
  bool is_infinite() const { return prime == 0; }
};

// One field factor of the local algebra.
struct LocalComponent {
  int ramification = 1;
  int residue_degree = 1;
  bool archimedean = false;
};

std::vector<LocalComponent> components(EtaleType t);
std::vector<LocalComponent> archimedean_components(Signature s);

// Q_p[x]/(f(x,1)) for f maximal at p; throws std::invalid_argument otherwise.
EtaleType etale_type(const MonicCubicForm& f, std::uint64_t p);

// #E(Q_p)[2] = 1 + (number of Q_p factors).
int local_two_torsion_size(EtaleType t);
int local_two_torsion_size(const MonicCubicForm& f, std::uint64_t p);

// Number of square classes of the local algebra with square norm whose
// square root generates an unramified extension.
int h1_unramified_size(const std::vector<LocalComponent>& comps);
int h1_unramified_size(EtaleType t);
int h1_unramified_size(const MonicCubicForm& f, Place v);

enum class SelmerStructure {
  Unramified,         // unramified condition at every place
  SolubleAtInfinity,  // soluble at infinity, unramified at every prime
};

enum class SignatureSelector { TotallyReal, Complex, All };

std::string_view to_string(SignatureSelector s);
SignatureSelector parse_signature_selector(std::string_view s);

class UnsupportedMass : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact local mass at v for n = 2.
Rational local_mass(SelmerStructure s, SignatureSelector sig, Place v);

struct FamilySpec {
  SignatureSelector signature = SignatureSelector::All;
  std::map<std::uint64_t, std::set<EtaleType>> prime_conditions;

  // Set when a listed prime omits a type that is not totally ramified.
  bool large_collection_warning() const;
  static FamilySpec parse_json(const std::string& text);
  std::string to_json() const;
};

bool family_contains(const FamilySpec& spec, const MonicCubicForm& f, const FieldClassification& cls);

// Product of the local masses over infinity and the listed primes.
Rational total_mass(SelmerStructure s, const FamilySpec& spec);

struct MonteCarloMass {
  Rational estimate;
  std::uint64_t accepted = 0;
  std::uint64_t discarded = 0;
};

// Averages h1_unramified_size / local_two_torsion_size over random
// (a, b, c) mod p^4, discarding samples that are not maximal at p.
MonteCarloMass monte_carlo_mass_check(std::uint64_t p, std::uint64_t samples, std::uint64_t seed);

}  // namespace moncubic
