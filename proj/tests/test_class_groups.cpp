#include <cmath>

#include "doctest.h"
#include "moncubic/class_groups.hpp"
#include "moncubic/orders.hpp"

using namespace moncubic;

namespace {
struct Known {
  MonicCubicForm f;
  i128 h;
  int cl2, cl2_plus;
};
// Class numbers from standard cubic field tables.
const Known kKnown[] = {
    {{0, -1, -1}, 1, 1, 1},   // disc -23
    {{0, 4, -1}, 2, 2, 2},    // disc -283
    {{0, -4, -1}, 1, 1, 2},   // disc 229, narrow class number 2
    {{0, 0, -2}, 1, 1, 1},    // disc -108
    {{1, -2, -1}, 1, 1, 1},   // disc 49
    {{0, -3, -1}, 1, 1, 1},   // disc 81
};
}  // namespace

TEST_CASE("quartic counts on known fields") {
  for (const auto& k : kKnown) {
    if (!classify(k.f).galois_s3) continue;
    CAPTURE(k.f.a);
    CAPTURE(k.f.b);
    CAPTURE(k.f.c);
    auto q = quartic_class_counts(k.f);
    CHECK(q.cl2 == k.cl2);
    CHECK(q.cl2_plus == k.cl2_plus);
  }
}

TEST_CASE("direct class group on known fields") {
  for (const auto& k : kKnown) {
    CAPTURE(k.f.a);
    CAPTURE(k.f.b);
    CAPTURE(k.f.c);
    auto d = direct_class_group(k.f);
    REQUIRE(d.determinate);
    CHECK(d.h == k.h);
    CHECK(d.two_part == k.cl2);
    if (discriminant(k.f) > 0) CHECK(d.narrow_two_part == k.cl2_plus);
  }
}

TEST_CASE("regulator of the plastic number field") {
  auto d = direct_class_group({0, -1, -1});
  REQUIRE(d.determinate);
  CHECK(std::fabs(static_cast<double>(d.regulator) - 0.2811995743) < 1e-6);
}

TEST_CASE("cross validation agrees on a small corpus") {
  int checked = 0;
  enumerate_by_height(4 * 3000, [&](const CanonicalForm& cf, const InvariantPair&) {
    auto cls = classify(cf.form);
    if (!cls.irreducible || cls.maximal != Maximality::Maximal || !cls.galois_s3) return;
    auto t = cross_validate(cf.form);
    CHECK_MESSAGE(!t.discrepancy, "disagreement on ", to_string(cf.form.c));
    CHECK(t.direct_determinate);
    // Sizes are powers of 2 and the narrow group is at most twice as large.
    CHECK((t.cl2_size & (t.cl2_size - 1)) == 0);
    CHECK((t.cl2_plus_size == t.cl2_size || t.cl2_plus_size == 2 * t.cl2_size));
    ++checked;
  });
  CHECK(checked > 30);
}

TEST_CASE("method names") {
  CHECK(to_string(ClassMethod::Quartic) == "quartic");
  CHECK(to_string(ClassMethod::BothAgree) != to_string(ClassMethod::BothDisagree));
}

TEST_CASE("large regulators need the precise unit search") {
  // Fundamental units with logs near 22 and 36; found only through kernel
  // vectors with very large coefficients.
  auto a = direct_class_group({1, 11, -19});
  REQUIRE(a.determinate);
  CHECK(a.h == 2);
  CHECK(std::fabs(static_cast<double>(a.regulator) - 22.0305) < 1e-3);
  auto b = direct_class_group({-1, 7, -24});
  REQUIRE(b.determinate);
  CHECK(b.h == 1);
  CHECK(std::fabs(static_cast<double>(b.regulator / b.analytic_hr) - 1) < 0.01);
  CHECK(quartic_class_counts({-1, 7, -24}).cl2 == 1);
}
