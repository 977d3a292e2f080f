#include "moncubic/moments.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace moncubic {

Rational predicted_first_moment(int n, const Rational& total_mass) {
  if (n < 2 || n > 5) throw std::invalid_argument("predicted_first_moment: n must be in {2,3,4,5}");
  if (total_mass < Rational(0)) throw std::invalid_argument("predicted_first_moment: negative mass");
  return Rational(1) + Rational(n) * total_mass;
}

Rational predicted_second_moment(const Rational& M) {
  if (M < Rational(0)) throw std::invalid_argument("predicted_second_moment: negative mass");
  return Rational(1) + Rational(6) * M + Rational(8) * M * M;
}

Rational predicted_fourth_selmer_first_moment(const Rational& M2, const Rational& M4) {
  if (M2 < Rational(0) || M4 < Rational(0)) throw std::invalid_argument("predicted_fourth_selmer_first_moment: negative mass");
  return Rational(1) + Rational(2) * M2 + Rational(4) * M4;
}

PredictedMoments predicted_narrow_moments(const Rational& mass_unramified, const Rational& mass_soluble) {
  PredictedMoments out;
  out.regime = Signature::TotallyReal;
  Rational first_s = predicted_first_moment(2, mass_unramified);
  Rational first_t = predicted_first_moment(2, mass_soluble);
  Rational second_s = predicted_second_moment(mass_unramified);
  Rational second_t = predicted_second_moment(mass_soluble);
  out.first_cl2 = {first_s, true};
  out.second_cl2 = {second_s, false};
  out.first_cl2_plus = {(first_t - first_s) + first_t, true};
  out.second_cl2_plus = {(second_t - second_s) + second_t, false};
  return out;
}

PredictedMoments predicted_narrow_moments() {
  return predicted_narrow_moments(local_mass(SelmerStructure::Unramified, SignatureSelector::TotallyReal, Place::infinity()),
                                  local_mass(SelmerStructure::SolubleAtInfinity, SignatureSelector::TotallyReal,
                                             Place::infinity()));
}

PredictedMoments predicted_moments(const FamilySpec& spec) {
  if (spec.signature == SignatureSelector::All)
    throw UnsupportedMass("predicted_moments: choose the real or the complex family");
  Rational M = total_mass(SelmerStructure::Unramified, spec);
  if (spec.signature == SignatureSelector::TotallyReal)
    return predicted_narrow_moments(M, total_mass(SelmerStructure::SolubleAtInfinity, spec));
  PredictedMoments out;
  out.regime = Signature::Complex;
  out.first_cl2 = out.first_cl2_plus = {predicted_first_moment(2, M), true};
  out.second_cl2 = out.second_cl2_plus = {predicted_second_moment(M), false};
  return out;
}

void MomentAccumulator::add(int cl2, int cl2_plus) {
  ++n_fields;
  sum_cl2 = checked_add(sum_cl2, cl2);
  sum_cl2_sq = checked_add(sum_cl2_sq, checked_mul(cl2, cl2));
  sum_cl2p = checked_add(sum_cl2p, cl2_plus);
  sum_cl2p_sq = checked_add(sum_cl2p_sq, checked_mul(cl2_plus, cl2_plus));
}

void MomentAccumulator::exclude(const std::string& reason) { ++excluded[reason]; }

namespace {

std::optional<Rational> mean(i128 sum, std::uint64_t n) {
  if (n == 0) return std::nullopt;
  return Rational(sum, static_cast<i128>(n));
}

}  // namespace

std::optional<Rational> MomentAccumulator::m1_cl2() const { return mean(sum_cl2, n_fields); }
std::optional<Rational> MomentAccumulator::m2_cl2() const { return mean(sum_cl2_sq, n_fields); }
std::optional<Rational> MomentAccumulator::m1_cl2_plus() const { return mean(sum_cl2p, n_fields); }
std::optional<Rational> MomentAccumulator::m2_cl2_plus() const { return mean(sum_cl2p_sq, n_fields); }

MomentAccumulator merge(const MomentAccumulator& a, const MomentAccumulator& b) {
  MomentAccumulator out = a;
  out.n_fields += b.n_fields;
  out.sum_cl2 = checked_add(out.sum_cl2, b.sum_cl2);
  out.sum_cl2_sq = checked_add(out.sum_cl2_sq, b.sum_cl2_sq);
  out.sum_cl2p = checked_add(out.sum_cl2p, b.sum_cl2p);
  out.sum_cl2p_sq = checked_add(out.sum_cl2p_sq, b.sum_cl2p_sq);
  for (const auto& [k, v] : b.excluded) out.excluded[k] += v;
  return out;
}

MomentReport build_moment_report(i128 bound4, const FamilySpec& family, const std::vector<FieldOutcome>& outcomes) {
  MomentReport r;
  r.bound4 = bound4;
  r.family = family;
  if (family.signature != SignatureSelector::All) r.predicted = predicted_moments(family);
  for (i128 b : {bound4 / 4, bound4 / 2, bound4}) {
    MomentAccumulator acc;
    for (const auto& o : outcomes)
      if (o.included && o.height_times_4 <= b) acc.add(o.cl2, o.cl2_plus);
    r.running.push_back({b, acc.n_fields, acc.m1_cl2(), acc.m1_cl2_plus()});
  }
  for (const auto& o : outcomes) {
    if (o.included)
      r.acc.add(o.cl2, o.cl2_plus);
    else
      r.acc.exclude(o.excluded_reason);
  }
  return r;
}

namespace {

using ojson = nlohmann::ordered_json;

std::string decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", q.to_long_double());
  return buf;
}

ojson rational_json(const std::optional<Rational>& q) {
  if (!q) return nullptr;
  return ojson{{"exact", q->str()}, {"decimal", decimal(*q)}};
}

ojson predicted_json(const PredictedValue& v) {
  return ojson{{"value", v.value.str()},
               {"status", v.exact ? "exact" : "upper bound; exact conditional on a tail estimate"}};
}

}  // namespace

std::string MomentReport::to_json() const {
  ojson j;
  j["X"] = Rational(bound4, 4).str();
  j["height_times_4"] = to_string(bound4);
  j["family"] = ojson::parse(family.to_json());
  j["n_fields"] = acc.n_fields;
  ojson ex = ojson::object();
  for (const auto& [k, v] : acc.excluded) ex[k] = v;
  j["excluded"] = ex;
  j["cl2"] = {{"m1", rational_json(acc.m1_cl2())}, {"m2", rational_json(acc.m2_cl2())}};
  j["cl2_plus"] = {{"m1", rational_json(acc.m1_cl2_plus())}, {"m2", rational_json(acc.m2_cl2_plus())}};
  if (predicted) {
    j["predicted"] = {{"regime", std::string(to_string(predicted->regime))},
                      {"cl2", {{"m1", predicted_json(predicted->first_cl2)}, {"m2", predicted_json(predicted->second_cl2)}}},
                      {"cl2_plus",
                       {{"m1", predicted_json(predicted->first_cl2_plus)}, {"m2", predicted_json(predicted->second_cl2_plus)}}}};
  } else {
    j["predicted"] = nullptr;
  }
  ojson running_json = ojson::array();
  for (const auto& p : running)
    running_json.push_back({{"X", Rational(p.bound4, 4).str()},
                            {"n_fields", p.n_fields},
                            {"m1", rational_json(p.m1_cl2)},
                            {"m1_plus", rational_json(p.m1_cl2_plus)}});
  j["running"] = running_json;
  j["discrepancies"] = discrepancies;
  if (acc.n_fields == 0) j["moments_defined"] = false;
  return j.dump(2) + "\n";
}

}  // namespace moncubic
