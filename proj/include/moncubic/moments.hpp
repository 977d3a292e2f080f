#pragma once

// Predicted moments from local masses, and streaming empirical moments.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moncubic/local_analysis.hpp"
#include "moncubic/rational.hpp"

namespace moncubic {

// 1 + n M.
Rational predicted_first_moment(int n, const Rational& total_mass);
// 1 + 6M + 8M^2.
Rational predicted_second_moment(const Rational& M);
// 1 + 2 M2 + 4 M4.
Rational predicted_fourth_selmer_first_moment(const Rational& M2, const Rational& M4);

struct PredictedValue {
  Rational value;
  bool exact = true;  // false: upper bound, exact conditional on a tail estimate
};

struct PredictedMoments {
  Signature regime = Signature::Complex;
  PredictedValue first_cl2, second_cl2, first_cl2_plus, second_cl2_plus;
};

// Narrow moments by inclusion-exclusion between the two Selmer structures:
// (Avg(soluble) - Avg(unramified)) + Avg(soluble).
PredictedMoments predicted_narrow_moments(const Rational& mass_unramified, const Rational& mass_soluble);
PredictedMoments predicted_narrow_moments();
// Predictions for a family; spec.signature must be real or complex.
PredictedMoments predicted_moments(const FamilySpec& spec);

struct MomentAccumulator {
  std::uint64_t n_fields = 0;
  i128 sum_cl2 = 0, sum_cl2_sq = 0, sum_cl2p = 0, sum_cl2p_sq = 0;
  std::map<std::string, std::uint64_t> excluded;

  void add(int cl2, int cl2_plus);
  void exclude(const std::string& reason);
  std::optional<Rational> m1_cl2() const;
  std::optional<Rational> m2_cl2() const;
  std::optional<Rational> m1_cl2_plus() const;
  std::optional<Rational> m2_cl2_plus() const;
  bool operator==(const MomentAccumulator&) const = default;
};

MomentAccumulator merge(const MomentAccumulator& a, const MomentAccumulator& b);

// One enumerated class, as seen by the moment statistics.
struct FieldOutcome {
  i128 height_times_4 = 0;
  bool included = false;
  int cl2 = 0, cl2_plus = 0;
  std::string excluded_reason;
};

struct RunningPoint {
  i128 bound4 = 0;
  std::uint64_t n_fields = 0;
  std::optional<Rational> m1_cl2, m1_cl2_plus;
};

struct MomentReport {
  i128 bound4 = 0;  // 4 X
  FamilySpec family;
  MomentAccumulator acc;
  std::optional<PredictedMoments> predicted;
  std::vector<RunningPoint> running;  // at X/4, X/2, X
  std::uint64_t discrepancies = 0;

  std::string to_json() const;
};

MomentReport build_moment_report(i128 bound4, const FamilySpec& family, const std::vector<FieldOutcome>& outcomes);

}  // namespace moncubic
