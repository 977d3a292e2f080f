#include "moncubic/local_analysis.hpp"

#include <random>
#include <stdexcept>

#include "json.hpp"
#include "moncubic/arith.hpp"

namespace moncubic {

std::string_view to_string(EtaleType t) {
  switch (t) {
    case EtaleType::Split: return "split";
    case EtaleType::UnramQuad: return "unram_quad";
    case EtaleType::UnramCubic: return "unram_cubic";
    case EtaleType::RamQuad: return "ram_quad";
    case EtaleType::RamCubic: return "ram_cubic";
  }
  return "?";
}

EtaleType parse_etale_type(std::string_view s) {
  for (EtaleType t : kAllEtaleTypes)
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown etale type '" + std::string(s) + "'");
}

std::string_view to_string(SignatureSelector s) {
  switch (s) {
    case SignatureSelector::TotallyReal: return "real";
    case SignatureSelector::Complex: return "complex";
    case SignatureSelector::All: return "all";
  }
  return "?";
}

SignatureSelector parse_signature_selector(std::string_view s) {
  if (s == "real") return SignatureSelector::TotallyReal;
  if (s == "complex") return SignatureSelector::Complex;
  if (s == "all") return SignatureSelector::All;
  throw std::invalid_argument("unknown signature '" + std::string(s) + "' (expected real, complex or all)");
}

std::vector<LocalComponent> components(EtaleType t) {
  switch (t) {
    case EtaleType::Split: return {{1, 1}, {1, 1}, {1, 1}};
    case EtaleType::UnramQuad: return {{1, 1}, {1, 2}};
    case EtaleType::UnramCubic: return {{1, 3}};
    case EtaleType::RamQuad: return {{1, 1}, {2, 1}};
    case EtaleType::RamCubic: return {{3, 1}};
  }
  throw std::logic_error("components: bad etale type");
}

std::vector<LocalComponent> archimedean_components(Signature s) {
  LocalComponent real{1, 1, true};
  LocalComponent complex{1, 2, true};
  if (s == Signature::TotallyReal) return {real, real, real};
  return {real, complex};
}

EtaleType etale_type(const MonicCubicForm& f, std::uint64_t p) {
  if (!f.valid()) throw std::invalid_argument("etale_type: zero discriminant");
  if (!is_maximal_at(f, p)) throw std::invalid_argument("etale_type: order is not maximal at p = " + std::to_string(p));
  auto roots = roots_with_multiplicity(FpPoly::from_integers({f.c, f.b, f.a, 1}, p));
  int total = 0;
  int max_mult = 0;
  for (const auto& [r, m] : roots) {
    total += m;
    max_mult = std::max(max_mult, m);
  }
  if (max_mult == 3) return EtaleType::RamCubic;
  if (max_mult == 2) return EtaleType::RamQuad;
  if (total == 3) return EtaleType::Split;
  if (total == 1) return EtaleType::UnramQuad;
  return EtaleType::UnramCubic;
}

int local_two_torsion_size(EtaleType t) {
  int rational = 0;
  for (const auto& c : components(t))
    if (c.ramification == 1 && c.residue_degree == 1) ++rational;
  return 1 + rational;
}

int local_two_torsion_size(const MonicCubicForm& f, std::uint64_t p) { return local_two_torsion_size(etale_type(f, p)); }

int h1_unramified_size(const std::vector<LocalComponent>& comps) {
  // A finite component contributes the classes {1, u} with u a nonsquare
  // unit; the norm of u is a nonsquare unit in Q_p exactly when e is odd.
  // Archimedean components have no nontrivial unramified class.
  std::vector<int> parity;
  for (const auto& c : comps)
    if (!c.archimedean) parity.push_back(c.ramification % 2);
  int count = 0;
  for (unsigned s = 0; s < (1u << parity.size()); ++s) {
    int sum = 0;
    for (std::size_t i = 0; i < parity.size(); ++i)
      if (s >> i & 1u) sum += parity[i];
    if (sum % 2 == 0) ++count;
  }
  return count;
}

int h1_unramified_size(EtaleType t) { return h1_unramified_size(components(t)); }

int h1_unramified_size(const MonicCubicForm& f, Place v) {
  if (v.is_infinite()) {
    i128 d = discriminant(f);
    if (d == 0) throw std::invalid_argument("h1_unramified_size: zero discriminant");
    return h1_unramified_size(archimedean_components(d > 0 ? Signature::TotallyReal : Signature::Complex));
  }
  return h1_unramified_size(etale_type(f, v.prime));
}

namespace {

int real_two_torsion(Signature s) {
  int real = 0;
  for (const auto& c : archimedean_components(s))
    if (c.residue_degree == 1) ++real;
  return 1 + real;
}

}  // namespace

Rational local_mass(SelmerStructure s, SignatureSelector sig, Place v) {
  if (!v.is_infinite()) {
    if (!is_prime(v.prime)) throw std::invalid_argument("local_mass: " + std::to_string(v.prime) + " is not prime");
    // Both structures take the unramified condition at finite places. The
    // ratio is the same for every etale type, so the family average is it.
    Rational m(h1_unramified_size(EtaleType::Split), local_two_torsion_size(EtaleType::Split));
    for (EtaleType t : kAllEtaleTypes)
      if (Rational(h1_unramified_size(t), local_two_torsion_size(t)) != m)
        throw std::logic_error("local_mass: unramified ratio depends on the etale type");
    return m;
  }
  if (sig == SignatureSelector::All)
    throw UnsupportedMass("local_mass: the mass at infinity needs a fixed signature (real or complex)");
  Signature signature = sig == SignatureSelector::TotallyReal ? Signature::TotallyReal : Signature::Complex;
  int torsion = real_two_torsion(signature);
  if (s == SelmerStructure::Unramified) return Rational(h1_unramified_size(archimedean_components(signature)), torsion);
  // Image of E(R)/2E(R): E(R) has #E(R)[2]/2 components.
  return Rational(torsion / 2, torsion);
}

bool FamilySpec::large_collection_warning() const {
  for (const auto& [p, allowed] : prime_conditions)
    for (EtaleType t : {EtaleType::Split, EtaleType::UnramQuad, EtaleType::UnramCubic, EtaleType::RamQuad})
      if (!allowed.count(t)) return true;
  return false;
}

FamilySpec FamilySpec::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("family spec: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("family spec: expected a JSON object");
  FamilySpec spec;
  for (const auto& [key, value] : j.items())
    if (key != "signature" && key != "primes") throw std::invalid_argument("family spec: unknown key '" + key + "'");
  if (j.contains("signature")) {
    if (!j["signature"].is_string()) throw std::invalid_argument("family spec: signature must be a string");
    spec.signature = parse_signature_selector(j["signature"].get<std::string>());
  }
  if (j.contains("primes")) {
    if (!j["primes"].is_object()) throw std::invalid_argument("family spec: primes must be an object");
    for (const auto& [key, value] : j["primes"].items()) {
      std::uint64_t p = 0;
      try {
        std::size_t used = 0;
        p = std::stoull(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw std::invalid_argument("family spec: bad prime key '" + key + "'");
      }
      if (!is_prime(p)) throw std::invalid_argument("family spec: " + key + " is not prime");
      if (!value.is_array() || value.empty())
        throw std::invalid_argument("family spec: prime " + key + " needs a nonempty array of types");
      std::set<EtaleType> allowed;
      for (const auto& t : value) {
        if (!t.is_string()) throw std::invalid_argument("family spec: type names must be strings");
        allowed.insert(parse_etale_type(t.get<std::string>()));
      }
      spec.prime_conditions[p] = std::move(allowed);
    }
  }
  return spec;
}

std::string FamilySpec::to_json() const {
  nlohmann::ordered_json j;
  j["signature"] = std::string(to_string(signature));
  nlohmann::ordered_json primes = nlohmann::ordered_json::object();
  for (const auto& [p, allowed] : prime_conditions) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (EtaleType t : allowed) arr.push_back(std::string(to_string(t)));
    primes[std::to_string(p)] = arr;
  }
  j["primes"] = primes;
  return j.dump();
}

bool family_contains(const FamilySpec& spec, const MonicCubicForm& f, const FieldClassification& cls) {
  if (spec.signature == SignatureSelector::TotallyReal && cls.signature != Signature::TotallyReal) return false;
  if (spec.signature == SignatureSelector::Complex && cls.signature != Signature::Complex) return false;
  for (const auto& [p, allowed] : spec.prime_conditions)
    if (!allowed.count(etale_type(f, p))) return false;
  return true;
}

Rational total_mass(SelmerStructure s, const FamilySpec& spec) {
  Rational m = local_mass(s, spec.signature, Place::infinity());
  for (const auto& [p, allowed] : spec.prime_conditions) m = m * local_mass(s, spec.signature, Place::finite(p));
  return m;
}

MonteCarloMass monte_carlo_mass_check(std::uint64_t p, std::uint64_t samples, std::uint64_t seed) {
  if (!is_prime(p)) throw std::invalid_argument("monte_carlo_mass_check: p must be prime");
  if (samples == 0) throw std::invalid_argument("monte_carlo_mass_check: samples must be positive");
  const i128 modulus = checked_pow(static_cast<i128>(p), 4);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coord(0, static_cast<std::uint64_t>(modulus) - 1);
  MonteCarloMass out;
  Rational sum(0);
  for (std::uint64_t i = 0; i < samples; ++i) {
    MonicCubicForm f{static_cast<i128>(coord(rng)), static_cast<i128>(coord(rng)), static_cast<i128>(coord(rng))};
    i128 d = discriminant(f);
    if (d % modulus == 0 || !is_maximal_at(f, p)) {
      ++out.discarded;
      continue;
    }
    EtaleType t = etale_type(f, p);
    sum = sum + Rational(h1_unramified_size(t), local_two_torsion_size(t));
    ++out.accepted;
  }
  out.estimate = out.accepted ? sum / Rational(static_cast<i128>(out.accepted)) : Rational(0);
  return out;
}

}  // namespace moncubic
