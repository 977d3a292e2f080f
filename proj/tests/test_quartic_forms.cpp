#include <random>

#include "doctest.h"
#include "moncubic/quartic_forms.hpp"

using namespace moncubic;

namespace {
const BinaryQuarticForm kSumOfFourth{1, 0, 0, 0, 1};  // x^4 + y^4
}

TEST_CASE("quartic invariants") {
  CHECK(quartic_invariants(kSumOfFourth) == QuarticInvariants{12, 0});
  CHECK(quartic_discriminant(kSumOfFourth) == 256);
  CHECK(quartic_invariants({}) == QuarticInvariants{0, 0});
  CHECK(quartic_invariants({1, -1, 0, 0, 0}) == QuarticInvariants{0, 0});
}

TEST_CASE("transform") {
  CHECK(transform(kSumOfFourth, {}) == kSumOfFourth);
  CHECK(transform(kSumOfFourth, {0, 1, 1, 0}) == kSumOfFourth);
  auto shifted = transform(kSumOfFourth, {1, 1, 0, 1});
  CHECK(shifted == BinaryQuarticForm{1, 4, 6, 4, 2});
  CHECK(quartic_invariants(shifted) == QuarticInvariants{12, 0});
  CHECK_THROWS_AS(transform(kSumOfFourth, {2, 0, 0, 1}), std::invalid_argument);
  Unimodular m{2, 1, 1, 1}, n{0, -1, 1, 3};
  CHECK(transform(transform(shifted, m), n) == transform(shifted, m * n));
}

TEST_CASE("reduction is an orbit invariant") {
  std::mt19937_64 rng(11);
  auto coef = [&] { return static_cast<i128>(static_cast<int>(rng() % 13) - 6); };
  int checked = 0;
  while (checked < 300) {
    BinaryQuarticForm g{coef(), coef(), coef(), coef(), coef()};
    if (g.a == 0 || g.e == 0 || quartic_discriminant(g) == 0 || has_linear_factor(g)) continue;
    Unimodular m;
    for (int k = 0; k < 4; ++k) {
      switch (rng() % 3) {
        case 0: m = m * Unimodular{1, static_cast<i128>(rng() % 5) - 2, 0, 1}; break;
        case 1: m = m * Unimodular{0, -1, 1, 0}; break;
        default: m = m * Unimodular{1, 0, 0, -1}; break;
      }
    }
    CHECK(reduce(g) == reduce(transform(g, m)));
    ++checked;
  }
  CHECK_THROWS_AS(reduce({1, -1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("linear factors and irreducibility") {
  CHECK(is_irreducible_quartic(kSumOfFourth));
  CHECK(!is_irreducible_quartic({1, 0, -5, 0, 4}));  // (x^2 - y^2)(x^2 - 4y^2)
  CHECK(is_irreducible_quartic({1, 0, 0, 0, -2}));
  CHECK(!is_irreducible_quartic({1, 0, 1, 0, -2}));  // (x^2 + 2y^2)(x^2 - y^2)
  CHECK(!is_irreducible_quartic({1, 0, 3, 0, 2}));   // (x^2 + y^2)(x^2 + 2y^2)
  CHECK(!is_irreducible_quartic({2, 0, 5, 0, 3}));   // (2x^2 + 3y^2)(x^2 + y^2)
  CHECK(has_linear_factor({1, 0, -5, 0, 4}));
  CHECK(!has_linear_factor({1, 0, 3, 0, 2}));
}

TEST_CASE("real roots") {
  CHECK(real_root_count(kSumOfFourth) == 0);
  CHECK(real_root_count({1, 0, -5, 0, 4}) == 4);
  CHECK(real_root_count({1, 0, 0, 0, -1}) == 2);
  CHECK(real_root_count({0, 1, 0, -1, 0}) == 4);  // y(x^3 - x y^2): root at infinity
}

TEST_CASE("overramification") {
  CHECK(is_overramified_at(kSumOfFourth, 2));
  CHECK(!is_overramified_at(kSumOfFourth, 3));
  CHECK(!nowhere_overramified(kSumOfFourth));
  CHECK(is_overramified_at({1, 0, 2, 0, 1}, 5));     // (x^2 + y^2)^2
  CHECK(!is_overramified_at({1, 0, -5, 0, 4}, 5));
  CHECK(is_overramified_at({1, 0, 10, 0, 25}, 5));   // (x^2 + 5y^2)^2 ~ x^4 mod 5
  CHECK(is_overramified_at({3, 0, 6, 0, 3}, 7));     // 3 (x^2 + y^2)^2
  CHECK(is_overramified_at({1, 0, 0, 0, 3}, 3));     // x^4 mod 3
}

TEST_CASE("ring maximality") {
  // x^4 + 4 y^4: vanishes to order 2 at x = 0 mod 2 with e = 4 = 0 mod 4.
  CHECK(!ring_maximal_at({1, 0, 0, 0, 4}, 2));
  CHECK(ring_maximal_at({1, 0, 0, 0, 2}, 2));
  CHECK(binary_form_maximal_at({1, 0, 0, -2}, 2));
  CHECK(!binary_form_maximal_at({1, -1, -2, -8}, 2));
  CHECK(binary_form_maximal_at({1, 0, -1, -1}, 23));
}

TEST_CASE("orbits with given invariants") {
  CHECK_THROWS_AS(orbits_with_invariants(0, 0), std::invalid_argument);
  // x^3 + 4x - 1: one irreducible orbit, nowhere overramified.
  auto s = orbits_with_invariants(-12, 27);
  int good = 0;
  for (const auto& o : s.orbits)
    if (o.irreducible && o.nowhere_overramified) ++good;
  CHECK(good == 1);
  // (I, -J) orbits are the negatives of (I, J) orbits.
  for (auto [I, J] : {std::pair<i128, i128>{-12, 27}, {12, 27}, {-21, 54}, {19, 97}}) {
    auto plus = orbits_with_invariants(I, J), minus = orbits_with_invariants(I, -J);
    REQUIRE(plus.orbits.size() == minus.orbits.size());
    for (const auto& o : plus.orbits) {
      auto mirrored = reduce(negate(o.rep));
      bool found = false;
      for (const auto& p : minus.orbits) found = found || p.rep == mirrored;
      CHECK(found);
    }
  }
}
