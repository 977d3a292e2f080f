#pragma once

// Monic binary cubic forms x^3 + a x^2 y + b x y^2 + c y^3, their invariants
// I = a^2 - 3b and J = -2a^3 + 9ab - 27c, canonical representatives of
// isomorphism classes, and enumeration of classes by height.

#include <compare>
#include <functional>
#include <optional>

#include "moncubic/int128.hpp"

namespace moncubic {

struct MonicCubicForm {
  i128 a = 0;
  i128 b = 0;
  i128 c = 0;

  // Nonzero discriminant; everything downstream requires it.
  bool valid() const;
  auto operator<=>(const MonicCubicForm&) const = default;
};

// Height is kept at 4x scale, max(4|I|^3, J^2), so that it stays integral.
struct InvariantPair {
  i128 I = 0;
  i128 J = 0;
  i128 height_times_4 = 0;
  auto operator<=>(const InvariantPair&) const = default;
};

struct CanonicalForm {
  MonicCubicForm form;
  bool star_applied = false;
  auto operator<=>(const CanonicalForm&) const = default;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

InvariantPair invariants(const MonicCubicForm& f);
i128 height_times_4(i128 I, i128 J);
// (4I^3 - J^2)/27; throws InternalError when the division is inexact.
i128 discriminant_from_invariants(i128 I, i128 J);
i128 discriminant(const MonicCubicForm& f);

// f(x + m y, y).
MonicCubicForm translate(const MonicCubicForm& f, i128 m);
// f(x, -y).
MonicCubicForm star(const MonicCubicForm& f);
CanonicalForm canonicalize(const MonicCubicForm& f);
bool is_isomorphic(const MonicCubicForm& f1, const MonicCubicForm& f2);

// The translation class with invariants (I, J), normalized to a in {-1,0,1},
// or nullopt when (I, J) is not attained by a monic integral cubic.
std::optional<MonicCubicForm> form_from_invariants(i128 I, i128 J);

enum class CountingConvention {
  Isomorphism,  // (I, J) ~ (I, -J); one class per (I, |J|)
  Translation,  // one class per (I, J)
};

struct EnumerationBlock {
  i128 I_lo = 0;
  i128 I_hi = -1;  // inclusive
};

// I-range of every class with height_times_4 <= bound4.
EnumerationBlock full_block(i128 bound4);

// Calls `emit` for every class with height_times_4 <= bound4 and I in block,
// in ascending (I, J) order. Pairs with zero discriminant are skipped.
void enumerate_block(i128 bound4, const EnumerationBlock& block, CountingConvention conv,
                     const std::function<void(const CanonicalForm&, const InvariantPair&)>& emit);

// All classes with height_times_4 <= bound4 (isomorphism convention).
void enumerate_by_height(i128 bound4, const std::function<void(const CanonicalForm&, const InvariantPair&)>& emit);

}  // namespace moncubic
