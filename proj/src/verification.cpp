#include "moncubic/verification.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "moncubic/moments.hpp"

namespace moncubic {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
CriterionResult timed(F&& body) {
  auto t0 = Clock::now();
  CriterionResult r = body();
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

i128 ceil_div(i128 x, i128 y) { return -floor_div(-x, y); }

bool power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

std::string fmt(const std::optional<Rational>& q) {
  if (!q) return "undefined";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4Lf", q->to_long_double());
  return buf;
}

std::vector<FieldRecord> corpus(i128 height, MethodSelector method, int jobs) {
  PipelineOptions o;
  o.bound4 = 4 * height;
  o.method = method;
  o.jobs = jobs;
  return run_pipeline(o);
}

}  // namespace

std::map<QuarticInvariants, std::set<BinaryQuarticForm>> brute_force_orbits(i128 max_height, int box) {
  std::map<QuarticInvariants, std::set<BinaryQuarticForm>> out;
  const i128 bound4 = 4 * max_height;
  i128 Imax = 0;
  while ((Imax + 1) * (Imax + 1) * (Imax + 1) <= max_height) ++Imax;
  const i128 B = box;
  for (i128 a = -B; a <= B; ++a) {
    if (a == 0) continue;
    for (i128 b = -B; b <= B; ++b)
      for (i128 c = -B; c <= B; ++c)
        for (i128 d = -B; d <= B; ++d) {
          // |I| <= Imax with I = 12 a e + c^2 - 3 b d.
          const i128 base = c * c - 3 * b * d;
          i128 lo = -Imax - base, hi = Imax - base;
          const i128 A = 12 * a;
          i128 e0 = A > 0 ? ceil_div(lo, A) : ceil_div(hi, A);
          i128 e1 = A > 0 ? floor_div(hi, A) : floor_div(lo, A);
          e0 = std::max(e0, -B);
          e1 = std::min(e1, B);
          for (i128 e = e0; e <= e1; ++e) {
            if (e == 0) continue;
            BinaryQuarticForm g{a, b, c, d, e};
            auto inv = quartic_invariants(g);
            if (height_times_4(inv.I, inv.J) > bound4) continue;
            if (4 * inv.I * inv.I * inv.I == inv.J * inv.J) continue;
            if (has_linear_factor(g)) continue;
            out[inv].insert(reduce(g));
          }
        }
  }
  return out;
}

CriterionResult criterion_predictors() {
  return timed([] {
    CriterionResult r{1, "predictor exactness", true, "", 0};
    std::ostringstream os;
    auto check = [&](const std::string& what, const Rational& got, const Rational& want) {
      if (got != want) {
        r.passed = false;
        os << what << " = " << got.str() << " (expected " << want.str() << "); ";
      }
    };
    using SS = SelmerStructure;
    using SigSel = SignatureSelector;
    check("M_inf real", local_mass(SS::Unramified, SigSel::TotallyReal, Place::infinity()), Rational(1, 4));
    check("M_inf complex", local_mass(SS::Unramified, SigSel::Complex, Place::infinity()), Rational(1, 2));
    for (std::uint64_t p : {2, 3, 5, 7, 11, 101})
      check("M_" + std::to_string(p), local_mass(SS::Unramified, SigSel::TotallyReal, Place::finite(p)), Rational(1));
    check("M~_inf real", local_mass(SS::SolubleAtInfinity, SigSel::TotallyReal, Place::infinity()), Rational(1, 2));

    FamilySpec real, complex;
    real.signature = SigSel::TotallyReal;
    complex.signature = SigSel::Complex;
    auto pr = predicted_moments(real);
    auto pc = predicted_moments(complex);
    check("first cl2 real", pr.first_cl2.value, Rational(3, 2));
    check("first cl2 complex", pc.first_cl2.value, Rational(2));
    check("first cl2+ real", pr.first_cl2_plus.value, Rational(5, 2));
    check("second cl2 real", pr.second_cl2.value, Rational(3));
    check("second cl2 complex", pc.second_cl2.value, Rational(6));
    check("second cl2+ real", pr.second_cl2_plus.value, Rational(9));
    r.detail = r.passed ? "masses 1/4, 1/2, 1, 1/2; first moments 3/2, 2, 5/2; second moments 3, 6, 9" : os.str();
    return r;
  });
}

CriterionResult criterion_cross_method(const VerifyOptions& opt) {
  return timed([&] {
    CriterionResult r{2, "cross-method agreement", true, "", 0};
    std::ostringstream os;
    auto recs = corpus(opt.corpus_height, MethodSelector::Both, opt.jobs);
    std::size_t fields = 0, disagreements = 0, undetermined = 0;
    for (const auto& f : recs) {
      if (f.status == FieldStatus::Indeterminate) ++undetermined;
      if (f.status != FieldStatus::Included) continue;
      ++fields;
      if (f.method == ClassMethod::BothDisagree) ++disagreements;
      if (f.method != ClassMethod::BothAgree) ++undetermined;
    }
    os << "height <= " << to_string(opt.corpus_height) << ": " << fields << " fields, " << disagreements
       << " discrepancies, " << undetermined << " undetermined";
    if (disagreements || undetermined) r.passed = false;

    // |disc| tier: fields above the corpus height, up to the tier height.
    PipelineOptions po;
    po.bound4 = 4 * opt.disc_tier_height;
    po.jobs = opt.jobs;
    po.class_data = false;
    std::size_t tier_fields = 0, tier_disagree = 0, tier_undetermined = 0;
    if (opt.disc_tier_height > opt.corpus_height) {
      for (const auto& f : run_pipeline(po)) {
        if (f.status != FieldStatus::Included) continue;
        if (f.inv.height_times_4 <= 4 * opt.corpus_height) continue;
        if (abs128(f.disc) > opt.disc_limit) continue;
        ++tier_fields;
        auto t = cross_validate(f.form.form);
        if (t.method == ClassMethod::BothDisagree) ++tier_disagree;
        if (!t.direct_determinate) ++tier_undetermined;
      }
      os << "; |disc| <= " << to_string(opt.disc_limit) << ", height <= " << to_string(opt.disc_tier_height)
         << ": " << tier_fields << " more fields, " << tier_disagree << " discrepancies, " << tier_undetermined
         << " undetermined";
      if (tier_disagree || tier_undetermined) r.passed = false;
    }
    r.detail = os.str();
    return r;
  });
}

CriterionResult criterion_local_table(const VerifyOptions& opt) {
  return timed([&] {
    CriterionResult r{3, "local lemma table", true, "", 0};
    const std::map<EtaleType, int> expected{{EtaleType::Split, 4},
                                            {EtaleType::UnramQuad, 2},
                                            {EtaleType::UnramCubic, 1},
                                            {EtaleType::RamQuad, 2},
                                            {EtaleType::RamCubic, 1}};
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coef(-60, 60);
    const std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::map<EtaleType, std::uint64_t> seen;
    std::uint64_t pairs = 0, mismatches = 0, attempts = 0;
    while (pairs < opt.local_samples && attempts < 100 * opt.local_samples) {
      ++attempts;
      MonicCubicForm f{coef(rng), coef(rng), coef(rng)};
      i128 disc = discriminant(f);
      if (disc == 0) continue;
      std::vector<std::uint64_t> primes(std::begin(small), std::end(small));
      // Primes of the discriminant supply the ramified types.
      for (const auto& [p, e] : factor(disc, {10'000}).factors)
        if (p <= 10'000) primes.push_back(static_cast<std::uint64_t>(p));
      std::uint64_t p = primes[rng() % primes.size()];
      if (!is_maximal_at(f, p)) continue;
      ++pairs;
      EtaleType t = etale_type(f, p);
      ++seen[t];
      int h1 = h1_unramified_size(f, Place::finite(p));
      int tors = local_two_torsion_size(f, p);
      if (h1 != tors || h1 != expected.at(t)) ++mismatches;
    }
    for (EtaleType t : kAllEtaleTypes) {
      if (h1_unramified_size(t) != expected.at(t) || local_two_torsion_size(t) != expected.at(t)) ++mismatches;
      if (seen[t] == 0) r.passed = false;
    }
    if (pairs < opt.local_samples || mismatches) r.passed = false;
    std::ostringstream os;
    os << pairs << " pairs, " << mismatches << " mismatches; types";
    for (EtaleType t : kAllEtaleTypes) os << ' ' << to_string(t) << '=' << seen[t];
    r.detail = os.str();
    return r;
  });
}

CriterionResult criterion_structural(const VerifyOptions& opt) {
  return timed([&] {
    CriterionResult r{4, "structural invariants", true, "", 0};
    std::ostringstream os;
    auto recs = corpus(opt.corpus_height, MethodSelector::Quartic, opt.jobs);
    std::size_t fields = 0, bad_size = 0, bad_ratio = 0, bad_star = 0;
    for (const auto& f : recs) {
      if (f.status != FieldStatus::Included) continue;
      ++fields;
      if (!power_of_two(f.cl2) || !power_of_two(f.cl2_plus)) ++bad_size;
      bool ratio_ok = f.signature == Signature::TotallyReal
                          ? (f.cl2_plus == f.cl2 || f.cl2_plus == 2 * f.cl2)
                          : f.cl2_plus == f.cl2;
      if (!ratio_ok) ++bad_ratio;
      MonicCubicForm s = star(f.form.form);
      auto cls = classify(s);
      auto q = quartic_class_counts(s);
      if (cls.signature != f.signature || !cls.is_maximal() || !cls.galois_s3 || q.cl2 != f.cl2 ||
          q.cl2_plus != f.cl2_plus)
        ++bad_star;
    }
    os << fields << " fields: " << bad_size << " non-powers of 2, " << bad_ratio << " bad ratios, " << bad_star
       << " star mismatches";
    if (bad_size || bad_ratio || bad_star) r.passed = false;

    // Orbit sets for every admissible (I, J) against the brute-force oracle.
    auto oracle = brute_force_orbits(opt.corpus_height, opt.oracle_box);
    std::size_t pairs = 0, orbit_total = 0, mismatched = 0;
    i128 Imax = 0;
    while ((Imax + 1) * (Imax + 1) * (Imax + 1) <= opt.corpus_height) ++Imax;
    const i128 bound4 = 4 * opt.corpus_height;
    for (i128 I = -Imax; I <= Imax; ++I) {
      i128 Jmax = static_cast<i128>(isqrt(static_cast<u128>(bound4)));
      for (i128 J = -Jmax; J <= Jmax; ++J) {
        if (height_times_4(I, J) > bound4) continue;
        i128 num = 4 * I * I * I - J * J;
        if (num == 0 || num % 27 != 0) continue;
        ++pairs;
        auto set = orbits_with_invariants(I, J);
        std::set<BinaryQuarticForm> mine;
        for (const auto& o : set.orbits) mine.insert(o.rep);
        orbit_total += mine.size();
        auto it = oracle.find({I, J});
        const std::set<BinaryQuarticForm> empty;
        if (mine != (it == oracle.end() ? empty : it->second)) ++mismatched;
      }
    }
    std::size_t oracle_total = 0;
    for (const auto& [k, v] : oracle) oracle_total += v.size();
    os << "; orbit oracle: " << pairs << " (I,J) pairs, " << orbit_total << " orbits vs " << oracle_total
       << " brute force, " << mismatched << " mismatched pairs";
    if (mismatched || orbit_total != oracle_total) r.passed = false;
    r.detail = os.str();
    return r;
  });
}

CriterionResult criterion_convergence(const VerifyOptions& opt) {
  return timed([&] {
    CriterionResult r{5, "convergence diagnostic", true, "", 0};
    PipelineOptions po;
    po.bound4 = 4 * opt.moment_height;
    po.jobs = opt.jobs;
    auto recs = run_pipeline(po);
    std::ostringstream os;
    os << "X = " << to_string(opt.moment_height);
    for (Signature sig : {Signature::Complex, Signature::TotallyReal}) {
      FamilySpec fam;
      fam.signature = sig == Signature::Complex ? SignatureSelector::Complex : SignatureSelector::TotallyReal;
      std::vector<FieldRecord> part;
      for (const auto& f : recs)
        if (f.signature == sig) part.push_back(f);
      auto rep = build_moment_report(po.bound4, fam, outcomes(part));
      const Rational target = rep.predicted->first_cl2.value;
      os << "; " << to_string(sig) << ": n = " << rep.acc.n_fields << ", m1 running";
      long double prev = INFINITY;
      bool monotone = true;
      for (const auto& p : rep.running) {
        os << ' ' << fmt(p.m1_cl2);
        if (p.m1_cl2) {
          long double gap = std::fabs(p.m1_cl2->to_long_double() - target.to_long_double());
          if (gap > prev + 1e-12L) monotone = false;
          prev = gap;
        }
      }
      os << " (predicted " << target.str() << ", trend " << (monotone ? "monotone" : "not monotone") << ")";
      if (sig == Signature::Complex) {
        auto m1 = rep.acc.m1_cl2();
        if (!m1 || *m1 < Rational(3, 2) || *m1 > Rational(5, 2)) r.passed = false;
      } else {
        os << ", cl2+ m1 " << fmt(rep.acc.m1_cl2_plus()) << " (predicted 5/2)";
      }
    }
    os << "; gate: complex m1 in [1.5, 2.5]";
    r.detail = os.str();
    return r;
  });
}

CriterionResult criterion_determinism(const VerifyOptions& opt) {
  return timed([&] {
    CriterionResult r{6, "determinism", true, "", 0};
    auto run = [&](int jobs) {
      PipelineOptions po;
      po.bound4 = 4 * opt.corpus_height;
      po.jobs = jobs;
      po.family.signature = SignatureSelector::Complex;
      auto recs = run_pipeline(po);
      return to_csv(recs) + moment_report(po, recs).to_json();
    };
    std::string a = run(1), b = run(8), c = run(1);
    auto mc = [&] {
      auto m = monte_carlo_mass_check(3, 2000, opt.seed);
      return m.estimate.str() + "/" + std::to_string(m.accepted) + "/" + std::to_string(m.discarded);
    };
    std::string m1 = mc(), m2 = mc();
    r.passed = a == b && a == c && m1 == m2;
    std::ostringstream os;
    os << "jobs 1 vs 8: " << (a == b ? "identical" : "differ") << "; repeat: " << (a == c ? "identical" : "differ")
       << " (" << a.size() << " bytes); seeded sampling: " << (m1 == m2 ? "identical" : "differ");
    r.detail = os.str();
    return r;
  });
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt) {
  return {criterion_predictors(),       criterion_cross_method(opt), criterion_local_table(opt),
          criterion_structural(opt),    criterion_convergence(opt),  criterion_determinism(opt)};
}

std::string format_result(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + " (" + r.name +
         "): " + r.detail + " [" + buf + "]";
}

}  // namespace moncubic
