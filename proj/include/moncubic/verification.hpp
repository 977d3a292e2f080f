#pragma once

// The acceptance suite. Each criterion returns one result line.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "moncubic/pipeline.hpp"

namespace moncubic {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  i128 corpus_height = 10'000;     // criteria 2, 4, 6
  i128 disc_tier_height = 100'000;  // criterion 2, fields with |disc| <= disc_limit
  i128 disc_limit = 1'000'000;
  i128 moment_height = 20'000'000;  // criterion 5
  int oracle_box = 20;             // coefficient box of the brute-force orbit oracle
  std::uint64_t local_samples = 600;
  std::uint64_t seed = 1;
  int jobs = 1;
};

// Forms (a, b, c, d, e) with |coefficients| <= box, a e != 0, no rational
// linear factor and height <= max_height, grouped into GL2(Z) orbits by
// (I, J). Independent of the (c, d, e) search used in production.
std::map<QuarticInvariants, std::set<BinaryQuarticForm>> brute_force_orbits(i128 max_height, int box);

CriterionResult criterion_predictors();
CriterionResult criterion_cross_method(const VerifyOptions& opt);
CriterionResult criterion_local_table(const VerifyOptions& opt);
CriterionResult criterion_structural(const VerifyOptions& opt);
CriterionResult criterion_convergence(const VerifyOptions& opt);
CriterionResult criterion_determinism(const VerifyOptions& opt);

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt);
std::string format_result(const CriterionResult& r);

}  // namespace moncubic
