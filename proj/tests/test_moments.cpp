#include "doctest.h"
#include "json.hpp"
#include "moncubic/moments.hpp"

using namespace moncubic;

TEST_CASE("predictors") {
  CHECK(predicted_first_moment(2, Rational(1, 4)) == Rational(3, 2));
  CHECK(predicted_first_moment(2, Rational(1, 2)) == Rational(2));
  CHECK(predicted_first_moment(3, Rational(1, 2)) == Rational(5, 2));
  CHECK(predicted_second_moment(Rational(1, 4)) == Rational(3));
  CHECK(predicted_second_moment(Rational(1, 2)) == Rational(6));
  CHECK(predicted_fourth_selmer_first_moment(Rational(1, 4), Rational(1, 4)) == Rational(5, 2));
  CHECK(predicted_fourth_selmer_first_moment(Rational(1, 2), Rational(1, 2)) == Rational(4));
  CHECK_THROWS_AS(predicted_first_moment(1, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(predicted_second_moment(Rational(-1)), std::invalid_argument);
}

TEST_CASE("family predictions") {
  FamilySpec real, complex, all;
  real.signature = SignatureSelector::TotallyReal;
  complex.signature = SignatureSelector::Complex;
  auto r = predicted_moments(real);
  CHECK(r.first_cl2.value == Rational(3, 2));
  CHECK(r.second_cl2.value == Rational(3));
  CHECK(r.first_cl2_plus.value == Rational(5, 2));
  CHECK(r.second_cl2_plus.value == Rational(9));
  CHECK(r.first_cl2.exact);
  CHECK(!r.second_cl2.exact);
  auto c = predicted_moments(complex);
  CHECK(c.first_cl2.value == Rational(2));
  CHECK(c.second_cl2.value == Rational(6));
  CHECK(c.first_cl2_plus.value == c.first_cl2.value);
  CHECK_THROWS(predicted_moments(all));
}

TEST_CASE("accumulator and merge") {
  MomentAccumulator a, b;
  a.add(1, 2);
  a.add(2, 2);
  b.add(4, 8);
  b.exclude("reducible");
  auto m = merge(a, b);
  CHECK(m.n_fields == 3);
  CHECK(*m.m1_cl2() == Rational(7, 3));
  CHECK(*m.m2_cl2() == Rational(21, 3));
  CHECK(*m.m1_cl2_plus() == Rational(4));
  CHECK(m.excluded.at("reducible") == 1);
  CHECK(merge(a, b) == merge(b, a));
  CHECK(!MomentAccumulator{}.m1_cl2());
}

TEST_CASE("report with no fields") {
  FamilySpec complex;
  complex.signature = SignatureSelector::Complex;
  auto rep = build_moment_report(4 * 100, complex, {});
  CHECK(rep.acc.n_fields == 0);
  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["n_fields"] == 0);
  CHECK(j["moments_defined"] == false);
  CHECK(j["cl2"]["m1"].is_null());
  CHECK(j["predicted"]["cl2"]["m1"]["value"] == "2");
}

TEST_CASE("running moments") {
  std::vector<FieldOutcome> outs;
  for (int h = 1; h <= 40; ++h) {
    FieldOutcome o;
    o.height_times_4 = 4 * h;
    o.included = h % 5 != 0;
    o.cl2 = h % 2 ? 1 : 2;
    o.cl2_plus = o.cl2;
    if (!o.included) o.excluded_reason = "cyclic";
    outs.push_back(o);
  }
  auto rep = build_moment_report(4 * 40, FamilySpec{}, outs);
  CHECK(rep.acc.n_fields == 32);
  CHECK(rep.acc.excluded.at("cyclic") == 8);
  REQUIRE(rep.running.size() == 3);
  CHECK(rep.running[0].n_fields == 8);
  CHECK(rep.running[2].n_fields == 32);
  CHECK(!rep.predicted);
}
