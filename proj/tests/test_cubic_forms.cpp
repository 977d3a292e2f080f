#include <set>

#include "doctest.h"
#include "moncubic/cubic_forms.hpp"

using namespace moncubic;

TEST_CASE("invariants") {
  auto a = invariants({0, -1, 0});
  CHECK(a.I == 3);
  CHECK(a.J == 0);
  CHECK(a.height_times_4 == 108);
  auto z = invariants({0, 0, 0});
  CHECK(z.I == 0);
  CHECK(z.J == 0);
  CHECK(z.height_times_4 == 0);
  auto b = invariants({0, -1, -1});
  CHECK(b.I == 3);
  CHECK(b.J == 27);
  CHECK(b.height_times_4 == 729);
  CHECK(discriminant_from_invariants(3, 27) == -23);
}

TEST_CASE("discriminant") {
  CHECK(discriminant({0, -1, 0}) == 4);
  CHECK(discriminant({0, -1, -1}) == -23);
  CHECK(discriminant({-1, -2, -8}) == -2012);
}

TEST_CASE("canonicalize") {
  // x^3 + 3x^2 + 2x + 1 translates to x^3 - x + 1, then star gives x^3 - x - 1.
  auto c = canonicalize({3, 2, 1});
  CHECK(c.form == MonicCubicForm{0, -1, -1});
  CHECK(c.star_applied);
  auto same = canonicalize({0, -1, 1});
  CHECK(same.form == MonicCubicForm{0, -1, -1});
  auto fixed = canonicalize({0, -1, -1});
  CHECK(fixed.form == MonicCubicForm{0, -1, -1});
  CHECK(!fixed.star_applied);
  CHECK_THROWS_AS(canonicalize({-1, 0, 0}), std::invalid_argument);  // x^3 - x^2
  // Canonical forms are fixed points.
  for (MonicCubicForm f : {MonicCubicForm{2, -5, 7}, MonicCubicForm{-4, 1, 9}, MonicCubicForm{1, 1, 1}}) {
    auto c1 = canonicalize(f);
    CHECK(canonicalize(c1.form).form == c1.form);
    CHECK(is_isomorphic(f, c1.form));
  }
}

TEST_CASE("isomorphism and star") {
  CHECK(is_isomorphic({3, 2, 1}, {0, -1, 1}));
  CHECK(is_isomorphic({0, -1, -1}, {0, -1, -1}));
  CHECK(is_isomorphic({0, -1, -1}, {0, -1, 1}));
  CHECK(!is_isomorphic({0, -1, -1}, {0, 4, -1}));
  CHECK(star({0, -1, -1}) == MonicCubicForm{0, -1, 1});
  MonicCubicForm f{1, -7, 3};
  CHECK(star(star(f)) == f);
  auto i = invariants(star({0, -1, -1}));
  CHECK(i.I == 3);
  CHECK(i.J == -27);
  CHECK(discriminant(star(f)) == discriminant(f));
  for (i128 m = -5; m <= 5; ++m) CHECK(invariants(translate(f, m)) == invariants(f));
}

TEST_CASE("form_from_invariants") {
  auto f = form_from_invariants(3, 27);
  REQUIRE(f);
  CHECK(*f == MonicCubicForm{0, -1, -1});
  CHECK(!form_from_invariants(3, 26));
}

TEST_CASE("enumeration matches the brute-force scan") {
  std::size_t n = 0;
  enumerate_by_height(0, [&](const CanonicalForm&, const InvariantPair&) { ++n; });
  CHECK(n == 0);

  // Classes with 4H <= 4000 from |a| <= 1, |b|, |c| <= 40, nonzero disc.
  std::set<MonicCubicForm> brute;
  for (i128 a = -1; a <= 1; ++a)
    for (i128 b = -40; b <= 40; ++b)
      for (i128 c = -40; c <= 40; ++c) {
        MonicCubicForm f{a, b, c};
        if (invariants(f).height_times_4 > 4000 || discriminant(f) == 0) continue;
        brute.insert(canonicalize(f).form);
      }
  std::set<MonicCubicForm> listed;
  enumerate_by_height(4000, [&](const CanonicalForm& cf, const InvariantPair& inv) {
    listed.insert(cf.form);
    CHECK(inv.height_times_4 <= 4000);
  });
  CHECK(brute.size() == 50);
  CHECK(listed == brute);
}

TEST_CASE("translation convention keeps both signs of J") {
  std::size_t iso = 0, trans = 0;
  auto block = full_block(40000);
  enumerate_block(40000, block, CountingConvention::Isomorphism,
                  [&](const CanonicalForm&, const InvariantPair&) { ++iso; });
  enumerate_block(40000, block, CountingConvention::Translation,
                  [&](const CanonicalForm&, const InvariantPair&) { ++trans; });
  CHECK(trans > iso);
  CHECK(trans < 2 * iso);
}
