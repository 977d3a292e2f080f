#include <set>

#include "doctest.h"
#include "moncubic/pipeline.hpp"

using namespace moncubic;

TEST_CASE("method and status names") {
  CHECK(parse_method("both") == MethodSelector::Both);
  CHECK(to_string(parse_method("direct")) == "direct");
  CHECK_THROWS_AS(parse_method("fast"), std::invalid_argument);
  CHECK(to_string(FieldStatus::NotMaximal) == "non_maximal");
}

TEST_CASE("empty and tiny runs") {
  PipelineOptions o;
  o.bound4 = 0;
  CHECK(run_pipeline(o).empty());
  CHECK(to_csv({}) == csv_header());
  o.bound4 = 4 * 100;
  o.jobs = 0;
  CHECK_THROWS_AS(run_pipeline(o), std::invalid_argument);
}

TEST_CASE("records and exclusions") {
  PipelineOptions o;
  o.bound4 = 4 * 2000;
  o.method = MethodSelector::Both;
  auto recs = run_pipeline(o);
  REQUIRE(!recs.empty());
  std::set<FieldStatus> seen;
  for (const auto& r : recs) {
    seen.insert(r.status);
    CHECK(r.inv.height_times_4 <= o.bound4);
    CHECK(r.disc == discriminant(r.form.form));
    CHECK(!r.discrepancy);
    CHECK(r.has_class_data == (r.status == FieldStatus::Included));
  }
  CHECK(seen.count(FieldStatus::Included));
  CHECK(seen.count(FieldStatus::Reducible));
  CHECK(seen.count(FieldStatus::NotMaximal));
  CHECK(!seen.count(FieldStatus::Indeterminate));
}

TEST_CASE("x^3 + 4x - 1 shows up with 2-rank 1") {
  PipelineOptions o;
  o.bound4 = 4 * 2000;
  bool found = false;
  for (const auto& r : run_pipeline(o)) {
    if (r.disc != -283) continue;
    found = true;
    CHECK(r.status == FieldStatus::Included);
    CHECK(r.cl2 == 2);
    CHECK(csv_row(r).find(",-283,complex,2,2,quartic,") != std::string::npos);
  }
  CHECK(found);
}

TEST_CASE("thread count does not change output") {
  PipelineOptions o;
  o.bound4 = 4 * 5000;
  auto one = to_csv(run_pipeline(o));
  o.jobs = 4;
  CHECK(to_csv(run_pipeline(o)) == one);
}

TEST_CASE("family restriction") {
  PipelineOptions o;
  o.bound4 = 4 * 3000;
  o.family.signature = SignatureSelector::TotallyReal;
  for (const auto& r : run_pipeline(o))
    if (r.signature == Signature::Complex && r.status != FieldStatus::Reducible && r.status != FieldStatus::NotMaximal)
      CHECK(r.status == FieldStatus::OutsideFamily);
}

TEST_CASE("deadline") {
  PipelineOptions o;
  o.bound4 = 4 * 100'000'000;
  o.deadline = std::chrono::steady_clock::now();
  CHECK_THROWS_AS(run_pipeline(o), BudgetExceeded);
}
