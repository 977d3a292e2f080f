// moncubic: enumerate monogenized cubic fields by height, compute 2-class
// data, print local masses, run moment experiments and the acceptance suite.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "moncubic/pipeline.hpp"
#include "moncubic/verification.hpp"

using namespace moncubic;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kBudget = 3 };

struct Config {
  std::uint64_t height_bound = 10'000;
  std::string signature;  // empty: from the family file, else all
  std::string family_file;
  std::string method = "quartic";
  int jobs = 1;
  std::string output;
  std::string format = "csv";
  std::uint64_t seed = 1;
  std::uint64_t budget_ms = 0;
  // verify only
  std::uint64_t disc_tier = 100'000;
  std::uint64_t moment_height = 20'000'000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + cfg.output);
  out << text;
}

PipelineOptions pipeline_options(const Config& cfg) {
  PipelineOptions o;
  o.bound4 = 4 * static_cast<i128>(cfg.height_bound);
  if (!cfg.family_file.empty()) o.family = FamilySpec::parse_json(read_file(cfg.family_file));
  if (!cfg.signature.empty()) o.family.signature = parse_signature_selector(cfg.signature);
  o.method = parse_method(cfg.method);
  o.jobs = cfg.jobs;
  if (cfg.budget_ms) o.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(cfg.budget_ms);
  if (o.family.large_collection_warning())
    std::cerr << "warning: family omits an unramified or partially ramified type at a listed prime;"
                 " predictions assume a large collection of local conditions\n";
  return o;
}

std::string records_json(const std::vector<FieldRecord>& recs) {
  ojson arr = ojson::array();
  for (const auto& r : recs) {
    ojson j;
    j["I"] = to_string(r.inv.I);
    j["J"] = to_string(r.inv.J);
    j["a"] = to_string(r.form.form.a);
    j["b"] = to_string(r.form.form.b);
    j["c"] = to_string(r.form.form.c);
    j["disc"] = to_string(r.disc);
    j["signature"] = std::string(to_string(r.signature));
    j["status"] = std::string(to_string(r.status));
    if (r.has_class_data) {
      j["cl2"] = r.cl2;
      j["cl2_plus"] = r.cl2_plus;
      j["method"] = std::string(to_string(r.method));
    }
    j["flags"] = r.flags;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

int cmd_records(const Config& cfg, bool class_data) {
  PipelineOptions o = pipeline_options(cfg);
  o.class_data = class_data;
  auto recs = run_pipeline(o);
  write_output(cfg, cfg.format == "json" ? records_json(recs) : to_csv(recs));
  return kOk;
}

int cmd_masses(const Config& cfg) {
  using SS = SelmerStructure;
  using SigSel = SignatureSelector;
  ojson j;
  j["unramified"] = {
      {"infinity_real", local_mass(SS::Unramified, SigSel::TotallyReal, Place::infinity()).str()},
      {"infinity_complex", local_mass(SS::Unramified, SigSel::Complex, Place::infinity()).str()},
      {"finite_prime", local_mass(SS::Unramified, SigSel::TotallyReal, Place::finite(2)).str()}};
  j["soluble_at_infinity"] = {
      {"infinity_real", local_mass(SS::SolubleAtInfinity, SigSel::TotallyReal, Place::infinity()).str()},
      {"infinity_complex", local_mass(SS::SolubleAtInfinity, SigSel::Complex, Place::infinity()).str()},
      {"finite_prime", local_mass(SS::SolubleAtInfinity, SigSel::TotallyReal, Place::finite(2)).str()}};
  ojson types = ojson::object();
  for (EtaleType t : kAllEtaleTypes)
    types[std::string(to_string(t))] = {{"h1_unramified", h1_unramified_size(t)},
                                        {"two_torsion", local_two_torsion_size(t)}};
  j["local_table"] = types;
  auto pred = [](const PredictedMoments& p) {
    return ojson{{"cl2_m1", p.first_cl2.value.str()},
                 {"cl2_m2", p.second_cl2.value.str()},
                 {"cl2_plus_m1", p.first_cl2_plus.value.str()},
                 {"cl2_plus_m2", p.second_cl2_plus.value.str()},
                 {"m2_status", "upper bound; exact conditional on a tail estimate"}};
  };
  FamilySpec real, complex;
  real.signature = SigSel::TotallyReal;
  complex.signature = SigSel::Complex;
  j["predicted"] = {{"real", pred(predicted_moments(real))}, {"complex", pred(predicted_moments(complex))}};
  if (!cfg.family_file.empty() || !cfg.signature.empty()) {
    PipelineOptions o = pipeline_options(cfg);
    ojson fam;
    fam["family"] = ojson::parse(o.family.to_json());
    fam["total_mass_unramified"] = total_mass(SS::Unramified, o.family).str();
    if (o.family.signature != SigSel::All) fam["predicted"] = pred(predicted_moments(o.family));
    j["family"] = fam;
  }
  write_output(cfg, j.dump(2) + "\n");
  return kOk;
}

int cmd_moments(const Config& cfg) {
  PipelineOptions o = pipeline_options(cfg);
  auto recs = run_pipeline(o);
  write_output(cfg, moment_report(o, recs).to_json());
  return kOk;
}

int cmd_verify(const Config& cfg) {
  VerifyOptions v;
  v.corpus_height = static_cast<i128>(cfg.height_bound);
  v.disc_tier_height = static_cast<i128>(cfg.disc_tier);
  v.moment_height = static_cast<i128>(cfg.moment_height);
  v.seed = cfg.seed;
  v.jobs = cfg.jobs;
  bool ok = true;
  std::string text;
  for (auto& r : run_acceptance(v)) {
    ok = ok && r.passed;
    text += format_result(r) + "\n";
  }
  write_output(cfg, text);
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monogenized cubic fields: 2-class groups and local masses"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub, bool records) {
    sub->add_option("--height-bound", cfg.height_bound, "height bound X on max(|I|^3, J^2/4)");
    sub->add_option("--output", cfg.output, "output path (default stdout)");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for sampling");
    if (records) {
      sub->add_option("--signature", cfg.signature, "real, complex or all");
      sub->add_option("--family", cfg.family_file, "FamilySpec JSON file");
      sub->add_option("--method", cfg.method, "quartic, direct or both");
      sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
      sub->add_option("--budget-ms", cfg.budget_ms, "wall clock budget; 0 means none");
    }
  };
  auto* enumerate = app.add_subcommand("enumerate", "canonical forms with classification");
  common(enumerate, true);
  auto* classgroups = app.add_subcommand("classgroups", "per-field 2-class data");
  common(classgroups, true);
  auto* masses = app.add_subcommand("masses", "local mass table and predicted moments");
  common(masses, true);
  auto* moments = app.add_subcommand("moments", "empirical moments against predictions");
  common(moments, true);
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  common(verify, false);
  verify->add_option("--disc-tier", cfg.disc_tier, "height tier for the |disc| <= 10^6 cross-check");
  verify->add_option("--moment-height", cfg.moment_height, "X for the convergence diagnostic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*enumerate) return cmd_records(cfg, false);
    if (*classgroups) return cmd_records(cfg, true);
    if (*masses) return cmd_masses(cfg);
    if (*moments) return cmd_moments(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
