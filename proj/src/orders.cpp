#include "moncubic/orders.hpp"

#include <stdexcept>

namespace moncubic {

std::string_view to_string(Signature s) { return s == Signature::TotallyReal ? "real" : "complex"; }

std::string_view to_string(Maximality m) {
  switch (m) {
    case Maximality::Maximal: return "maximal";
    case Maximality::NotMaximal: return "not_maximal";
    case Maximality::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

// f(r, 1) == 0; a value too large to represent is certainly nonzero.
bool is_root(const MonicCubicForm& f, i128 r) {
  try {
    i128 v = checked_add(checked_mul(checked_add(checked_mul(checked_add(r, f.a), r), f.b), r), f.c);
    return v == 0;
  } catch (const OverflowError&) {
    return false;
  }
}

}  // namespace

bool is_irreducible_cubic(const MonicCubicForm& f) {
  if (f.c == 0) return false;
  // Monic: every rational root is an integer dividing c.
  Factorization fc = factor(f.c);
  if (!fc.complete()) throw std::runtime_error("is_irreducible_cubic: could not factor c = " + to_string(f.c));
  for (i128 d : positive_divisors(fc))
    if (is_root(f, d) || is_root(f, -d)) return false;
  return true;
}

bool is_maximal_at(const MonicCubicForm& f, std::uint64_t p) {
  i128 disc = discriminant(f);
  if (disc == 0) throw std::invalid_argument("is_maximal_at: zero discriminant");
  if (valuation(disc, p) < 2) return true;
  return dedekind_maximal({f.c, f.b, f.a, 1}, p);
}

Maximality is_maximal(const MonicCubicForm& f, const FactorOptions& opt) {
  i128 disc = discriminant(f);
  if (disc == 0) throw std::invalid_argument("is_maximal: zero discriminant");
  Factorization fd = factor(disc, opt);
  for (const auto& [p, e] : fd.factors)
    if (e >= 2 && !dedekind_maximal({f.c, f.b, f.a, 1}, p)) return Maximality::NotMaximal;
  if (!fd.complete()) {
    // A prime cofactor contributes exponent one and cannot break maximality.
    if (fd.cofactor <= UINT64_MAX && is_prime(static_cast<std::uint64_t>(fd.cofactor))) return Maximality::Maximal;
    return Maximality::Indeterminate;
  }
  return Maximality::Maximal;
}

FieldClassification classify(const MonicCubicForm& f, const FactorOptions& opt) {
  FieldClassification out;
  out.disc = discriminant(f);
  if (out.disc == 0) throw std::invalid_argument("classify: zero discriminant");
  out.irreducible = is_irreducible_cubic(f);
  out.maximal = is_maximal(f, opt);
  out.galois_s3 = out.irreducible && !is_perfect_square(out.disc);
  out.signature = out.disc > 0 ? Signature::TotallyReal : Signature::Complex;
  return out;
}

}  // namespace moncubic
