#pragma once

// Per-field processing over a height range: classification, family filter,
// 2-class data by the selected method, CSV rows and moment outcomes. Work is
// split into I-blocks run on a thread pool and merged in block order.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "moncubic/class_groups.hpp"
#include "moncubic/cubic_forms.hpp"
#include "moncubic/moments.hpp"

namespace moncubic {

enum class MethodSelector { Quartic, Direct, Both };
std::string_view to_string(MethodSelector m);
MethodSelector parse_method(std::string_view s);

enum class FieldStatus { Included, Reducible, NotMaximal, Indeterminate, Cyclic, OutsideFamily };
std::string_view to_string(FieldStatus s);

struct FieldRecord {
  CanonicalForm form;
  InvariantPair inv;
  i128 disc = 0;
  Signature signature = Signature::Complex;
  FieldStatus status = FieldStatus::Included;
  bool has_class_data = false;
  int cl2 = 0, cl2_plus = 0;
  ClassMethod method = ClassMethod::Quartic;
  std::vector<std::string> flags;
  std::optional<Discrepancy> discrepancy;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineOptions {
  i128 bound4 = 0;
  FamilySpec family;
  MethodSelector method = MethodSelector::Quartic;
  int jobs = 1;
  CountingConvention convention = CountingConvention::Isomorphism;
  bool class_data = true;  // false: classify and filter only
  OrbitSearchOptions quartic;
  DirectOptions direct;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

FieldRecord process_field(const CanonicalForm& cf, const InvariantPair& inv, const PipelineOptions& opt);
std::vector<FieldRecord> run_pipeline(const PipelineOptions& opt);

std::string csv_header();
std::string csv_row(const FieldRecord& r);
std::string to_csv(const std::vector<FieldRecord>& records);

std::vector<FieldOutcome> outcomes(const std::vector<FieldRecord>& records);
MomentReport moment_report(const PipelineOptions& opt, const std::vector<FieldRecord>& records);

}  // namespace moncubic
