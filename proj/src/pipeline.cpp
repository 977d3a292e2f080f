#include "moncubic/pipeline.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace moncubic {

std::string_view to_string(MethodSelector m) {
  switch (m) {
    case MethodSelector::Quartic: return "quartic";
    case MethodSelector::Direct: return "direct";
    case MethodSelector::Both: return "both";
  }
  return "?";
}

MethodSelector parse_method(std::string_view s) {
  if (s == "quartic") return MethodSelector::Quartic;
  if (s == "direct") return MethodSelector::Direct;
  if (s == "both") return MethodSelector::Both;
  throw std::invalid_argument("unknown method '" + std::string(s) + "' (expected quartic, direct or both)");
}

std::string_view to_string(FieldStatus s) {
  switch (s) {
    case FieldStatus::Included: return "included";
    case FieldStatus::Reducible: return "reducible";
    case FieldStatus::NotMaximal: return "non_maximal";
    case FieldStatus::Indeterminate: return "indeterminate";
    case FieldStatus::Cyclic: return "cyclic";
    case FieldStatus::OutsideFamily: return "outside_family";
  }
  return "?";
}

FieldRecord process_field(const CanonicalForm& cf, const InvariantPair& inv, const PipelineOptions& opt) {
  FieldRecord r;
  r.form = cf;
  r.inv = inv;
  const MonicCubicForm& f = cf.form;
  if (cf.star_applied) r.flags.push_back("star");
  FieldClassification cls;
  try {
    cls = classify(f);
  } catch (const std::runtime_error&) {
    // c could not be factored for the rational root test.
    r.disc = discriminant(f);
    r.signature = r.disc > 0 ? Signature::TotallyReal : Signature::Complex;
    r.status = FieldStatus::Indeterminate;
    r.flags.push_back("factorization");
    return r;
  }
  r.disc = cls.disc;
  r.signature = cls.signature;
  if (!cls.irreducible) {
    r.status = FieldStatus::Reducible;
    return r;
  }
  if (cls.maximal == Maximality::NotMaximal) {
    r.status = FieldStatus::NotMaximal;
    return r;
  }
  if (cls.maximal == Maximality::Indeterminate) {
    r.status = FieldStatus::Indeterminate;
    r.flags.push_back("factorization");
    return r;
  }
  if (!cls.galois_s3) {
    r.status = FieldStatus::Cyclic;
    return r;
  }
  if (!family_contains(opt.family, f, cls)) {
    r.status = FieldStatus::OutsideFamily;
    return r;
  }
  if (!opt.class_data) return r;

  try {
    switch (opt.method) {
      case MethodSelector::Quartic: {
        auto q = quartic_class_counts(f, opt.quartic);
        r.cl2 = q.cl2;
        r.cl2_plus = q.cl2_plus;
        r.method = ClassMethod::Quartic;
        if (q.cl2 != q.cl2_strict || q.cl2_plus != q.cl2_plus_strict) r.flags.push_back("convention_split");
        break;
      }
      case MethodSelector::Direct: {
        auto d = direct_class_group(f, opt.direct);
        if (!d.determinate) {
          r.status = FieldStatus::Indeterminate;
          r.flags.push_back("direct");
          return r;
        }
        r.cl2 = d.two_part;
        r.cl2_plus = cls.signature == Signature::TotallyReal ? d.narrow_two_part : d.two_part;
        r.method = ClassMethod::Direct;
        break;
      }
      case MethodSelector::Both: {
        auto t = cross_validate(f, opt.quartic, opt.direct);
        r.cl2 = t.cl2_size;
        r.cl2_plus = t.cl2_plus_size;
        r.method = t.method;
        r.discrepancy = t.discrepancy;
        if (!t.direct_determinate) r.flags.push_back("direct_indeterminate");
        if (t.convention_split) r.flags.push_back("convention_split");
        if (t.discrepancy) r.flags.push_back("discrepancy");
        break;
      }
    }
  } catch (const BoundOverflow&) {
    r.status = FieldStatus::Indeterminate;
    r.flags.push_back("orbit_bound");
    return r;
  }
  r.has_class_data = true;
  return r;
}

std::vector<FieldRecord> run_pipeline(const PipelineOptions& opt) {
  if (opt.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (opt.bound4 <= 0) return {};
  EnumerationBlock full = full_block(opt.bound4);
  std::vector<EnumerationBlock> blocks;
  for (i128 I = full.I_lo; I <= full.I_hi; ++I) blocks.push_back({I, I});
  std::vector<std::vector<FieldRecord>> results(blocks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!stop) {
      std::size_t i = next++;
      if (i >= blocks.size()) return;
      try {
        enumerate_block(opt.bound4, blocks[i], opt.convention, [&](const CanonicalForm& cf, const InvariantPair& inv) {
          if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline)
            throw BudgetExceeded("time budget exceeded");
          results[i].push_back(process_field(cf, inv, opt));
        });
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  int n = std::min<int>(opt.jobs, static_cast<int>(blocks.size()));
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<FieldRecord> out;
  for (auto& b : results)
    for (auto& r : b) out.push_back(std::move(r));
  return out;
}

std::string csv_header() { return "I,J,a,b,c,disc,signature,cl2,cl2_plus,method,flags\n"; }

std::string csv_row(const FieldRecord& r) {
  std::ostringstream os;
  os << to_string(r.inv.I) << ',' << to_string(r.inv.J) << ',' << to_string(r.form.form.a) << ','
     << to_string(r.form.form.b) << ',' << to_string(r.form.form.c) << ',' << to_string(r.disc) << ','
     << to_string(r.signature) << ',';
  if (r.has_class_data)
    os << r.cl2 << ',' << r.cl2_plus << ',' << to_string(r.method) << ',';
  else
    os << ",,,";
  std::vector<std::string> flags;
  if (r.status != FieldStatus::Included) flags.emplace_back(to_string(r.status));
  flags.insert(flags.end(), r.flags.begin(), r.flags.end());
  for (std::size_t i = 0; i < flags.size(); ++i) os << (i ? ";" : "") << flags[i];
  os << '\n';
  return os.str();
}

std::string to_csv(const std::vector<FieldRecord>& records) {
  std::string out = csv_header();
  for (const auto& r : records) out += csv_row(r);
  return out;
}

std::vector<FieldOutcome> outcomes(const std::vector<FieldRecord>& records) {
  std::vector<FieldOutcome> out;
  for (const auto& r : records) {
    FieldOutcome o;
    o.height_times_4 = r.inv.height_times_4;
    o.included = r.status == FieldStatus::Included && r.has_class_data;
    o.cl2 = r.cl2;
    o.cl2_plus = r.cl2_plus;
    if (!o.included) o.excluded_reason = std::string(to_string(r.status));
    out.push_back(o);
  }
  return out;
}

MomentReport moment_report(const PipelineOptions& opt, const std::vector<FieldRecord>& records) {
  MomentReport rep = build_moment_report(opt.bound4, opt.family, outcomes(records));
  for (const auto& r : records)
    if (r.discrepancy) ++rep.discrepancies;
  return rep;
}

}  // namespace moncubic
