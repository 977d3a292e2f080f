#include "moncubic/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moncubic {

using cld = std::complex<long double>;

std::vector<cld> polynomial_roots(const std::vector<long double>& desc) {
  if (desc.size() < 2 || desc[0] == 0) throw std::invalid_argument("polynomial_roots: bad polynomial");
  std::vector<long double> p = desc;
  const int n = static_cast<int>(p.size()) - 1;
  for (auto& x : p) x /= desc[0];

  auto eval = [&](cld z, cld& dz) {
    cld v = p[0];
    dz = 0;
    for (int i = 1; i <= n; ++i) {
      dz = dz * z + v;
      v = v * z + p[i];
    }
    return v;
  };

  long double radius = 0;
  for (int i = 1; i <= n; ++i) radius = std::max(radius, std::pow(std::fabs(p[i]), 1.0L / i));
  radius = 2 * radius + 1;
  std::vector<cld> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::polar(radius, 2 * M_PIl * i / n + 0.4L);

  long double last = INFINITY;
  int stalled = 0;
  for (int iter = 0; iter < 500; ++iter) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      cld dz;
      cld v = eval(z[i], dz);
      if (v == cld(0)) continue;
      cld ratio = v / dz;
      cld sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      cld w = ratio / (1.0L - ratio * sum);
      z[i] -= w;
      change = std::max(change, std::abs(w) / (1 + std::abs(z[i])));
    }
    if (change < 1e-18L) break;
    // At the precision floor the step size stops shrinking.
    if (change < 1e-12L && change >= last / 2) {
      if (++stalled >= 2) break;
    } else {
      stalled = 0;
    }
    last = change;
  }
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      cld dz;
      cld v = eval(r, dz);
      if (dz == cld(0)) break;
      cld next = r - v / dz;
      cld dn;
      if (std::abs(eval(next, dn)) >= std::abs(v)) break;
      r = next;
    }
  }
  return z;
}

long double real_gcd(long double x, long double y, long double tol) {
  x = std::fabs(x);
  y = std::fabs(y);
  if (x < y) std::swap(x, y);
  while (y > tol) {
    long double r = std::fmod(x, y);
    if (y - r <= tol) r = 0;
    x = y;
    y = r;
  }
  return x;
}

}  // namespace moncubic
