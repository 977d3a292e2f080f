#include "doctest.h"
#include "moncubic/local_analysis.hpp"

using namespace moncubic;

TEST_CASE("etale types") {
  CHECK(etale_type({0, -1, 0}, 5) == EtaleType::Split);
  CHECK(etale_type({0, -1, -1}, 23) == EtaleType::RamQuad);
  CHECK(etale_type({0, -1, -1}, 2) == EtaleType::UnramCubic);
  CHECK(etale_type({0, -1, -1}, 5) == EtaleType::UnramQuad);  // root 2 only
  CHECK(etale_type({0, 0, -2}, 2) == EtaleType::RamCubic);
  for (EtaleType t : kAllEtaleTypes) CHECK(parse_etale_type(to_string(t)) == t);
  CHECK_THROWS_AS(parse_etale_type("bogus"), std::invalid_argument);
}

TEST_CASE("local torsion and unramified classes") {
  CHECK(local_two_torsion_size(EtaleType::Split) == 4);
  CHECK(local_two_torsion_size(EtaleType::UnramQuad) == 2);
  CHECK(local_two_torsion_size(EtaleType::UnramCubic) == 1);
  CHECK(local_two_torsion_size(EtaleType::RamQuad) == 2);
  CHECK(local_two_torsion_size(EtaleType::RamCubic) == 1);
  for (EtaleType t : kAllEtaleTypes) CHECK(h1_unramified_size(t) == local_two_torsion_size(t));
  CHECK(h1_unramified_size({0, -1, -1}, Place::infinity()) == 1);
  CHECK(h1_unramified_size({0, -4, -1}, Place::infinity()) == 1);
  CHECK(h1_unramified_size({0, -1, 0}, Place::finite(5)) == 4);
  CHECK(h1_unramified_size({0, -1, -1}, Place::finite(23)) == 2);
  CHECK(local_two_torsion_size({0, -1, -1}, 23) == 2);
}

TEST_CASE("local masses are exact") {
  using SS = SelmerStructure;
  using S = SignatureSelector;
  CHECK(local_mass(SS::Unramified, S::TotallyReal, Place::infinity()) == Rational(1, 4));
  CHECK(local_mass(SS::Unramified, S::Complex, Place::infinity()) == Rational(1, 2));
  CHECK(local_mass(SS::Unramified, S::All, Place::finite(7)) == Rational(1));
  CHECK(local_mass(SS::Unramified, S::TotallyReal, Place::finite(2)) == Rational(1));
  CHECK(local_mass(SS::SolubleAtInfinity, S::TotallyReal, Place::infinity()) == Rational(1, 2));
  CHECK(local_mass(SS::SolubleAtInfinity, S::TotallyReal, Place::finite(3)) == Rational(1));
  CHECK_THROWS_AS(local_mass(SS::Unramified, S::All, Place::infinity()), UnsupportedMass);
}

TEST_CASE("family specs") {
  FamilySpec all;
  auto cls = classify({0, -1, -1});
  CHECK(family_contains(all, {0, -1, -1}, cls));
  auto split2 = FamilySpec::parse_json(R"({"primes": {"2": ["split"]}})");
  CHECK(!family_contains(split2, {0, -1, -1}, cls));
  CHECK(split2.large_collection_warning());
  auto inert2 = FamilySpec::parse_json(R"({"primes": {"2": ["unram_cubic"]}})");
  CHECK(family_contains(inert2, {0, -1, -1}, cls));
  auto complex = FamilySpec::parse_json(R"({"signature": "complex"})");
  CHECK(family_contains(complex, {0, -1, -1}, cls));
  CHECK(!family_contains(complex, {0, -4, -1}, classify({0, -4, -1})));
  auto roundtrip = FamilySpec::parse_json(split2.to_json());
  CHECK(roundtrip.prime_conditions == split2.prime_conditions);
  auto full = FamilySpec::parse_json(R"({"primes": {"3": ["split", "unram_quad", "unram_cubic", "ram_quad"]}})");
  CHECK(!full.large_collection_warning());
  CHECK_THROWS_AS(FamilySpec::parse_json(R"({"primes": {"4": ["split"]}})"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse_json(R"({"primes": {"2": []}})"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse_json(R"({"prime": {}})"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse_json(R"({"signature": "sideways"})"), std::invalid_argument);
}

TEST_CASE("total mass") {
  FamilySpec real;
  real.signature = SignatureSelector::TotallyReal;
  CHECK(total_mass(SelmerStructure::Unramified, real) == Rational(1, 4));
  CHECK(total_mass(SelmerStructure::SolubleAtInfinity, real) == Rational(1, 2));
  FamilySpec complex;
  complex.signature = SignatureSelector::Complex;
  CHECK(total_mass(SelmerStructure::Unramified, complex) == Rational(1, 2));
}

TEST_CASE("sampled p-adic mass") {
  for (std::uint64_t p : {2, 3, 5}) {
    auto m = monte_carlo_mass_check(p, 1000, 1);
    CHECK(m.estimate == Rational(1));
    CHECK(m.accepted > 0);
    CHECK(m.accepted + m.discarded == 1000);
  }
  auto a = monte_carlo_mass_check(3, 300, 7), b = monte_carlo_mass_check(3, 300, 7);
  CHECK(a.accepted == b.accepted);
  CHECK_THROWS(monte_carlo_mass_check(4, 10, 1));
}
