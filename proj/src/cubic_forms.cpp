#include "moncubic/cubic_forms.hpp"

#include <stdexcept>

namespace moncubic {

bool MonicCubicForm::valid() const { return discriminant(*this) != 0; }

InvariantPair invariants(const MonicCubicForm& f) {
  i128 I = checked_sub(checked_mul(f.a, f.a), checked_mul(3, f.b));
  i128 a3 = checked_mul(checked_mul(f.a, f.a), f.a);
  i128 J = checked_sub(checked_add(checked_mul(-2, a3), checked_mul(9, checked_mul(f.a, f.b))), checked_mul(27, f.c));
  return {I, J, height_times_4(I, J)};
}

i128 height_times_4(i128 I, i128 J) {
  i128 cube = checked_mul(4, checked_pow(abs128(I), 3));
  i128 sq = checked_mul(J, J);
  return cube > sq ? cube : sq;
}

i128 discriminant_from_invariants(i128 I, i128 J) {
  i128 num = checked_sub(checked_mul(4, checked_pow(I, 3)), checked_mul(J, J));
  if (num % 27 != 0) throw InternalError("4I^3 - J^2 not divisible by 27 for I=" + to_string(I) + " J=" + to_string(J));
  return num / 27;
}

i128 discriminant(const MonicCubicForm& f) {
  InvariantPair inv = invariants(f);
  return discriminant_from_invariants(inv.I, inv.J);
}

MonicCubicForm translate(const MonicCubicForm& f, i128 m) {
  // (x+my)^3 + a(x+my)^2 y + b(x+my) y^2 + c y^3
  i128 m2 = checked_mul(m, m);
  i128 m3 = checked_mul(m2, m);
  MonicCubicForm g;
  g.a = checked_add(f.a, checked_mul(3, m));
  g.b = checked_add(checked_add(f.b, checked_mul(checked_mul(2, f.a), m)), checked_mul(3, m2));
  g.c = checked_add(checked_add(checked_add(f.c, checked_mul(f.b, m)), checked_mul(f.a, m2)), m3);
  return g;
}

MonicCubicForm star(const MonicCubicForm& f) { return {-f.a, f.b, -f.c}; }

CanonicalForm canonicalize(const MonicCubicForm& f) {
  if (!f.valid()) throw std::invalid_argument("canonicalize: zero discriminant");
  // a + 3m in {-1, 0, 1}
  i128 target = floor_mod(f.a + 1, 3) - 1;
  MonicCubicForm g = translate(f, (target - f.a) / 3);
  CanonicalForm out{g, false};
  if (invariants(g).J < 0) {
    out.form = star(g);
    out.star_applied = true;
  }
  return out;
}

bool is_isomorphic(const MonicCubicForm& f1, const MonicCubicForm& f2) {
  return canonicalize(f1).form == canonicalize(f2).form;
}

std::optional<MonicCubicForm> form_from_invariants(i128 I, i128 J) {
  std::optional<MonicCubicForm> found;
  for (i128 a = -1; a <= 1; ++a) {
    i128 nb = a * a - I;
    if (floor_mod(nb, 3) != 0) continue;
    i128 b = nb / 3;
    i128 nc = checked_sub(checked_add(-2 * a * a * a, checked_mul(9 * a, b)), J);
    if (floor_mod(nc, 27) != 0) continue;
    if (found) throw InternalError("two normalized forms share invariants (I,J)");
    found = MonicCubicForm{a, b, nc / 27};
  }
  return found;
}

EnumerationBlock full_block(i128 bound4) {
  if (bound4 < 0) return {0, -1};
  i128 imax = static_cast<i128>(icbrt(static_cast<u128>(bound4 / 4)));
  return {-imax, imax};
}

void enumerate_block(i128 bound4, const EnumerationBlock& block, CountingConvention conv,
                     const std::function<void(const CanonicalForm&, const InvariantPair&)>& emit) {
  if (bound4 <= 0) return;
  EnumerationBlock full = full_block(bound4);
  i128 lo = block.I_lo > full.I_lo ? block.I_lo : full.I_lo;
  i128 hi = block.I_hi < full.I_hi ? block.I_hi : full.I_hi;
  i128 jmax = static_cast<i128>(isqrt(static_cast<u128>(bound4)));
  for (i128 I = lo; I <= hi; ++I) {
    if (checked_mul(4, checked_pow(abs128(I), 3)) > bound4) continue;
    i128 jmin = conv == CountingConvention::Isomorphism ? 0 : -jmax;
    for (i128 J = jmin; J <= jmax; ++J) {
      if (checked_mul(4, checked_pow(I, 3)) == J * J) continue;
      auto f = form_from_invariants(I, J);
      if (!f) continue;
      CanonicalForm cf{*f, false};
      emit(cf, InvariantPair{I, J, height_times_4(I, J)});
    }
  }
}

void enumerate_by_height(i128 bound4, const std::function<void(const CanonicalForm&, const InvariantPair&)>& emit) {
  enumerate_block(bound4, full_block(bound4), CountingConvention::Isomorphism, emit);
}

}  // namespace moncubic
