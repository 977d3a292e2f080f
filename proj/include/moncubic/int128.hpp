#pragma once

// Checked 128-bit integer helpers. All exact arithmetic in the hot loops runs
// on __int128; every operation that can overflow goes through these.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace moncubic {

using i128 = __int128;
using u128 = unsigned __int128;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline i128 checked_add(i128 x, i128 y) {
  i128 r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("i128 addition overflow");
  return r;
}

inline i128 checked_sub(i128 x, i128 y) {
  i128 r;
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("i128 subtraction overflow");
  return r;
}

inline i128 checked_mul(i128 x, i128 y) {
  i128 r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("i128 multiplication overflow");
  return r;
}

inline i128 checked_pow(i128 base, unsigned exp) {
  i128 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline i128 abs128(i128 x) { return x < 0 ? checked_sub(0, x) : x; }

// Floor division and the matching nonnegative remainder.
inline i128 floor_div(i128 x, i128 y) {
  i128 q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}
inline i128 floor_mod(i128 x, i128 y) { return x - floor_div(x, y) * y; }

inline i128 gcd128(i128 x, i128 y) {
  x = abs128(x);
  y = abs128(y);
  while (y != 0) {
    i128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

// floor(sqrt(n)) for n >= 0.
u128 isqrt(u128 n);
// floor(cbrt(n)) for n >= 0.
u128 icbrt(u128 n);
bool is_perfect_square(i128 n);

std::string to_string(i128 x);
i128 parse_i128(std::string_view s);

inline bool fits_int64(i128 x) { return x >= INT64_MIN && x <= INT64_MAX; }

}  // namespace moncubic
