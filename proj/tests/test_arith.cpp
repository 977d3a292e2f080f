#include "doctest.h"
#include "moncubic/arith.hpp"
#include "moncubic/numeric.hpp"
#include "moncubic/rational.hpp"

using namespace moncubic;

TEST_CASE("rationals stay in lowest terms") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK((Rational(1, 4) + Rational(1, 4)) == Rational(1, 2));
  CHECK((Rational(3, 2) * Rational(2, 3)) == Rational(1));
  CHECK(Rational(5, 2).str() == "5/2");
  CHECK(Rational(9).str() == "9");
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("checked 128-bit helpers") {
  CHECK(to_string(parse_i128("-170141183460469231731687303715884105728")) ==
        "-170141183460469231731687303715884105728");
  CHECK_THROWS_AS(checked_mul(parse_i128("100000000000000000000"), parse_i128("100000000000000000000")),
                  std::overflow_error);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(isqrt(99) == 9);
  CHECK(is_perfect_square(49));
  CHECK(!is_perfect_square(-4));
}

TEST_CASE("factorization") {
  auto f = factor(-2012);
  CHECK(f.complete());
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<std::uint64_t, int>{2, 2});
  CHECK(f.factors[1] == std::pair<std::uint64_t, int>{503, 1});
  CHECK(f.exponent_of(503) == 1);
  CHECK(is_prime(229));
  CHECK(!is_prime(221));
  CHECK(valuation(48, 2) == 4);
  auto big = factor(parse_i128("1000000000000000003") * 999983);
  CHECK(big.complete());
  CHECK(big.factors.size() == 2);
  // Cofactors past 64 bits are reported, not factored.
  auto hard = factor(parse_i128("1000000000000000003") * 1000000007);
  CHECK(!hard.complete());
  CHECK(hard.cofactor == static_cast<u128>(parse_i128("1000000000000000003") * 1000000007));
}

TEST_CASE("polynomials mod p") {
  // x^3 - x - 1 = (x - 10)^2 (x - 3) mod 23
  auto roots = roots_with_multiplicity(FpPoly::from_integers({-1, -1, 0, 1}, 23));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair<std::uint64_t, int>{3, 1});
  CHECK(roots[1] == std::pair<std::uint64_t, int>{10, 2});
  CHECK(distinct_root_count(FpPoly::from_integers({1, 1, 0, 1}, 2)) == 0);
  CHECK(distinct_root_count(FpPoly::from_integers({0, -1, 0, 1}, 1000003)) == 3);
  // x^3 - x^2 - 2x - 8 is not 2-maximal; x^3 - x - 1 is 23-maximal.
  CHECK(!dedekind_maximal({-8, -2, -1, 1}, 2));
  CHECK(dedekind_maximal({-1, -1, 0, 1}, 23));
}

TEST_CASE("numeric roots") {
  auto r = polynomial_roots({1, 0, 0, 0, 1});
  REQUIRE(r.size() == 4);
  for (auto z : r) CHECK(std::abs(z * z * z * z + 1.0L) < 1e-15L);
  CHECK(real_gcd(1.5L, 2.25L, 1e-9L) == doctest::Approx(0.75));
}
