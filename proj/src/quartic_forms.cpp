#include "moncubic/quartic_forms.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "moncubic/numeric.hpp"

namespace moncubic {

using cld = std::complex<long double>;

std::string BinaryQuarticForm::str() const {
  return "[" + to_string(a) + "," + to_string(b) + "," + to_string(c) + "," + to_string(d) + "," + to_string(e) + "]";
}

Unimodular Unimodular::operator*(const Unimodular& o) const {
  return {checked_add(checked_mul(p, o.p), checked_mul(q, o.r)), checked_add(checked_mul(p, o.q), checked_mul(q, o.s)),
          checked_add(checked_mul(r, o.p), checked_mul(s, o.r)), checked_add(checked_mul(r, o.q), checked_mul(s, o.s))};
}

QuarticInvariants quartic_invariants(const BinaryQuarticForm& g) {
  const auto& [a, b, c, d, e] = g;
  i128 I = checked_add(checked_sub(checked_mul(12, checked_mul(a, e)), checked_mul(3, checked_mul(b, d))),
                       checked_mul(c, c));
  i128 J = checked_mul(72, checked_mul(a, checked_mul(c, e)));
  J = checked_add(J, checked_mul(9, checked_mul(b, checked_mul(c, d))));
  J = checked_sub(J, checked_mul(27, checked_mul(a, checked_mul(d, d))));
  J = checked_sub(J, checked_mul(27, checked_mul(checked_mul(b, b), e)));
  J = checked_sub(J, checked_mul(2, checked_pow(c, 3)));
  return {I, J};
}

i128 quartic_discriminant(const BinaryQuarticForm& g) {
  auto [I, J] = quartic_invariants(g);
  i128 num = checked_sub(checked_mul(4, checked_pow(I, 3)), checked_mul(J, J));
  if (num % 27 != 0) throw std::logic_error("quartic_discriminant: 4I^3 - J^2 not divisible by 27");
  return num / 27;
}

namespace {

// Coefficients of (u x + v y)^k, from x^k down to y^k.
std::vector<i128> linear_power(i128 u, i128 v, int k) {
  std::vector<i128> out{1};
  for (int i = 0; i < k; ++i) {
    std::vector<i128> next(out.size() + 1, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j] = checked_add(next[j], checked_mul(out[j], u));
      next[j + 1] = checked_add(next[j + 1], checked_mul(out[j], v));
    }
    out = std::move(next);
  }
  return out;
}

std::vector<i128> mul_forms(const std::vector<i128>& f, const std::vector<i128>& g) {
  std::vector<i128> out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(f[i], g[j]));
  return out;
}

std::array<i128, 5> coeffs_of(const BinaryQuarticForm& g) { return {g.a, g.b, g.c, g.d, g.e}; }

}  // namespace

BinaryQuarticForm transform(const BinaryQuarticForm& g, const Unimodular& m) {
  i128 det = m.det();
  if (det != 1 && det != -1) throw std::invalid_argument("transform: matrix is not unimodular");
  auto co = coeffs_of(g);
  std::array<i128, 5> out{};
  for (int k = 0; k <= 4; ++k) {
    if (co[k] == 0) continue;
    auto term = mul_forms(linear_power(m.p, m.q, 4 - k), linear_power(m.r, m.s, k));
    for (int i = 0; i <= 4; ++i) out[i] = checked_add(out[i], checked_mul(co[k], term[i]));
  }
  return {out[0], out[1], out[2], out[3], out[4]};
}

BinaryQuarticForm negate(const BinaryQuarticForm& g) { return {-g.a, -g.b, -g.c, -g.d, -g.e}; }

std::vector<cld> numeric_roots(const BinaryQuarticForm& g) {
  std::vector<long double> p;  // descending
  auto co = coeffs_of(g);
  int start = 0;
  while (start < 5 && co[start] == 0) ++start;
  if (start >= 4) throw std::invalid_argument("numeric_roots: degenerate form");
  for (int i = start; i <= 4; ++i) p.push_back(static_cast<long double>(co[i]));
  return polynomial_roots(p);
}

namespace {

struct Objective {
  std::vector<cld> roots;  // finite roots
  long double value(long double x, long double t) const {
    long double v = 0;
    for (const auto& r : roots) {
      long double dx = x - r.real();
      v += std::log(dx * dx + r.imag() * r.imag() + t * t);
    }
    return v - 4 * std::log(t);
  }
};

}  // namespace

std::complex<long double> covariant_point(const BinaryQuarticForm& g) {
  Objective obj{numeric_roots(g)};
  const auto& roots = obj.roots;
  long double x = 0;
  for (const auto& r : roots) x += r.real();
  x /= roots.size();
  long double spread = 0;
  for (const auto& r : roots) spread += std::norm(r - cld(x, 0));
  long double s = 0.5L * std::log(spread / roots.size() + 1e-30L);

  for (int iter = 0; iter < 400; ++iter) {
    long double t = std::exp(s);
    long double gx = 0, gs = -4, hxx = 0, hxs = 0, hss = 0;
    for (const auto& r : roots) {
      long double dx = x - r.real();
      long double D = dx * dx + r.imag() * r.imag() + t * t;
      gx += 2 * dx / D;
      gs += 2 * t * t / D;
      hxx += 2 / D - 4 * dx * dx / (D * D);
      hxs += -4 * dx * t * t / (D * D);
      hss += 4 * t * t / D - 4 * t * t * t * t / (D * D);
    }
    // The metric scale of x is t, so measure the gradient in those units.
    if (std::fabs(gx) * t + std::fabs(gs) < 1e-17L) break;
    long double det = hxx * hss - hxs * hxs;
    long double sx, ss;
    if (hxx > 0 && det > 0) {
      sx = -(hss * gx - hxs * gs) / det;
      ss = -(hxx * gs - hxs * gx) / det;
    } else {
      sx = -gx * t * t;
      ss = -gs;
    }
    long double f0 = obj.value(x, t);
    long double step = 1;
    for (int k = 0; k < 60; ++k) {
      long double nx = x + step * sx, ns = s + step * ss;
      if (obj.value(nx, std::exp(ns)) <= f0) {
        x = nx;
        s = ns;
        break;
      }
      step /= 2;
      if (k == 59) {
        x = nx;
        s = ns;
      }
    }
    if (std::fabs(step * sx) < 1e-19L * (std::fabs(x) + t) && std::fabs(step * ss) < 1e-19L) break;
  }
  return {x, std::exp(s)};
}

namespace {

struct Quad {
  long double A, B, C;
};

Quad transform_quad(const Quad& q, const Unimodular& m) {
  long double p = static_cast<long double>(m.p), qq = static_cast<long double>(m.q);
  long double r = static_cast<long double>(m.r), s = static_cast<long double>(m.s);
  return {q.A * p * p + q.B * p * r + q.C * r * r, 2 * q.A * p * qq + q.B * (p * s + qq * r) + 2 * q.C * r * s,
          q.A * qq * qq + q.B * qq * s + q.C * s * s};
}

Quad covariant_quad(const BinaryQuarticForm& g) {
  cld z = covariant_point(g);
  return {1, -2 * z.real(), std::norm(z)};
}

const std::vector<Unimodular>& neighbour_matrices() {
  static const std::vector<Unimodular> mats = [] {
    std::vector<Unimodular> out;
    for (int p = -2; p <= 2; ++p)
      for (int q = -2; q <= 2; ++q)
        for (int r = -2; r <= 2; ++r)
          for (int s = -2; s <= 2; ++s)
            if (p * s - q * r == 1 || p * s - q * r == -1) out.push_back({p, q, r, s});
    return out;
  }();
  return mats;
}

}  // namespace

constexpr long double kReduceEps = 1e-9L;

BinaryQuarticForm reduce(const BinaryQuarticForm& g0) {
  if (quartic_discriminant(g0) == 0) throw std::invalid_argument("reduce: zero discriminant");
  BinaryQuarticForm g = g0;
  for (int round = 0;; ++round) {
    if (round > 60) throw std::runtime_error("reduce: no convergence for " + g0.str());
    Quad q = covariant_quad(g);
    Unimodular gamma;
    bool moved = false;
    for (int it = 0; it < 200; ++it) {
      long double m = std::nearbyint(-q.B / (2 * q.A));
      if (m != 0 && std::fabs(q.B) > q.A * (1 + kReduceEps)) {
        Unimodular t{1, static_cast<i128>(m), 0, 1};
        q = transform_quad(q, t);
        gamma = gamma * t;
        moved = true;
      }
      if (q.A > q.C * (1 + kReduceEps)) {
        Unimodular sw{0, -1, 1, 0};
        q = transform_quad(q, sw);
        gamma = gamma * sw;
        moved = true;
      } else {
        break;
      }
    }
    if (!moved) break;
    g = transform(g, gamma);
  }

  // g now has its covariant point in the fundamental domain; pick the least
  // coefficient tuple among the forms whose point lies in its closure.
  Quad q = covariant_quad(g);
  const long double eps = kReduceEps;
  BinaryQuarticForm best = g;
  bool have = false;
  for (const auto& m : neighbour_matrices()) {
    Quad qm = transform_quad(q, m);
    if (std::fabs(qm.B) <= qm.A * (1 + eps) && qm.A <= qm.C * (1 + eps)) {
      BinaryQuarticForm h = transform(g, m);
      if (!have || h < best) best = h;
      have = true;
    }
  }
  return best;
}

namespace {

i128 eval_form(const BinaryQuarticForm& g, i128 x, i128 y) {
  auto co = coeffs_of(g);
  i128 v = 0;
  i128 xp = 1;
  std::array<i128, 5> xpow{}, ypow{};
  for (int i = 0; i <= 4; ++i) {
    xpow[i] = xp;
    xp = checked_mul(xp, x);
  }
  i128 yp = 1;
  for (int i = 0; i <= 4; ++i) {
    ypow[i] = yp;
    yp = checked_mul(yp, y);
  }
  for (int k = 0; k <= 4; ++k) v = checked_add(v, checked_mul(co[k], checked_mul(xpow[4 - k], ypow[k])));
  return v;
}

bool vanishes_at(const BinaryQuarticForm& g, i128 x, i128 y) {
  try {
    return eval_form(g, x, y) == 0;
  } catch (const OverflowError&) {
    return false;
  }
}

std::vector<i128> divisors_of(i128 n) {
  Factorization f = factor(n);
  if (!f.complete()) throw std::runtime_error("could not factor " + to_string(n));
  return positive_divisors(f);
}

}  // namespace

bool has_linear_factor(const BinaryQuarticForm& g) {
  if (g.a == 0 || g.e == 0) return true;
  // Roots p/q in lowest terms have p | e and q | a.
  auto dp = divisors_of(g.e);
  auto dq = divisors_of(g.a);
  for (i128 p : dp)
    for (i128 q : dq) {
      if (gcd128(p, q) != 1) continue;
      if (vanishes_at(g, p, q) || vanishes_at(g, -p, q)) return true;
    }
  return false;
}

bool is_irreducible_quartic(const BinaryQuarticForm& g) {
  if (quartic_discriminant(g) == 0) throw std::invalid_argument("is_irreducible_quartic: zero discriminant");
  if (has_linear_factor(g)) return false;
  // Any factorization over Z is into two quadratics whose roots are a pair
  // of the numeric roots; the leading coefficient p1 divides a.
  auto r = numeric_roots(g);
  const int pairs[3][2] = {{0, 1}, {0, 2}, {0, 3}};
  auto leading = divisors_of(g.a);
  for (const auto& pr : pairs) {
    cld s = r[pr[0]] + r[pr[1]];
    cld m = r[pr[0]] * r[pr[1]];
    if (std::fabs(s.imag()) > 1e-6L * (1 + std::abs(s)) || std::fabs(m.imag()) > 1e-6L * (1 + std::abs(m))) continue;
    for (i128 p1 : leading) {
      long double q1f = -static_cast<long double>(p1) * s.real();
      long double r1f = static_cast<long double>(p1) * m.real();
      if (std::fabs(q1f) > 1e30L || std::fabs(r1f) > 1e30L) continue;
      i128 q1 = static_cast<i128>(std::llroundl(q1f));
      i128 r1 = static_cast<i128>(std::llroundl(r1f));
      if (r1 == 0) continue;
      i128 p2 = g.a / p1;
      i128 tq = checked_sub(g.b, checked_mul(q1, p2));
      if (tq % p1 != 0) continue;
      i128 q2 = tq / p1;
      i128 tr = checked_sub(checked_sub(g.c, checked_mul(q1, q2)), checked_mul(r1, p2));
      if (tr % p1 != 0) continue;
      i128 r2 = tr / p1;
      if (checked_add(checked_mul(q1, r2), checked_mul(r1, q2)) == g.d && checked_mul(r1, r2) == g.e) return false;
    }
  }
  return true;
}

int real_root_count(const BinaryQuarticForm& g) {
  if (quartic_discriminant(g) == 0) throw std::invalid_argument("real_root_count: zero discriminant");
  auto co = coeffs_of(g);
  std::vector<mpq_class> p;  // descending
  int start = 0;
  int at_infinity = 0;
  while (co[start] == 0) {
    ++start;
    ++at_infinity;
  }
  for (int i = start; i <= 4; ++i) p.push_back(mpq_class(to_string(co[i])));

  auto derivative = [](const std::vector<mpq_class>& f) {
    std::vector<mpq_class> out;
    int n = static_cast<int>(f.size()) - 1;
    for (int i = 0; i < n; ++i) out.push_back(f[i] * (n - i));
    return out;
  };
  auto trim = [](std::vector<mpq_class>& f) {
    std::size_t k = 0;
    while (k < f.size() && f[k] == 0) ++k;
    f.erase(f.begin(), f.begin() + static_cast<long>(k));
  };
  auto remainder = [&](std::vector<mpq_class> num, const std::vector<mpq_class>& den) {
    while (num.size() >= den.size()) {
      mpq_class factor = num[0] / den[0];
      for (std::size_t i = 0; i < den.size(); ++i) num[i] -= factor * den[i];
      num.erase(num.begin());
      trim(num);
      if (num.empty()) break;
    }
    return num;
  };

  std::vector<std::vector<mpq_class>> seq{p, derivative(p)};
  while (true) {
    auto r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    seq.push_back(r);
  }
  auto changes = [&](bool plus) {
    int count = 0;
    int prev = 0;
    for (const auto& f : seq) {
      int deg = static_cast<int>(f.size()) - 1;
      int s = sgn(f[0]);
      if (!plus && deg % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return changes(false) - changes(true) + at_infinity;
}

namespace {

bool monic_is_square(const FpPoly& m) {
  const std::uint64_t p = m.modulus();
  if (m.degree() % 2 != 0) return false;
  if (p == 2) {
    for (int i = 1; i <= m.degree(); i += 2)
      if (m.coeff(i) != 0) return false;
    return true;
  }
  const int h = m.degree() / 2;
  std::vector<std::uint64_t> s(h + 1, 0);
  s[h] = 1;
  const std::uint64_t inv2 = invmod(2, p);
  for (int i = 1; i <= h; ++i) {
    // Coefficient of x^(2h - i) in s^2 is 2 s_h s_(h-i) + (terms in known s_j).
    std::uint64_t known = 0;
    for (int j = h - i + 1; j < h; ++j) {
      int k = 2 * h - i - j;
      if (k > h - i && k < h) known = (known + mulmod(s[j], s[k], p)) % p;
    }
    std::uint64_t target = (m.coeff(2 * h - i) + p - known) % p;
    s[h - i] = mulmod(target, inv2, p);
  }
  FpPoly root(s, p);
  return root * root == m;
}

FpPoly dehomogenize_mod(const BinaryQuarticForm& g, std::uint64_t p) {
  return FpPoly::from_integers({g.e, g.d, g.c, g.b, g.a}, p);
}

}  // namespace

bool is_overramified_at(const BinaryQuarticForm& g, std::uint64_t p) {
  FpPoly G = dehomogenize_mod(g, p);
  if (G.is_zero()) return true;
  int at_infinity = 4 - G.degree();
  if (at_infinity % 2 != 0) return false;
  return monic_is_square(G.monic());
}

std::vector<std::uint64_t> overramified_primes(const BinaryQuarticForm& g, const Factorization& disc_factors) {
  if (!disc_factors.complete()) throw std::invalid_argument("overramified_primes: incomplete factorization");
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : disc_factors.factors)
    if (is_overramified_at(g, p)) out.push_back(p);
  return out;
}

bool nowhere_overramified(const BinaryQuarticForm& g, const Factorization& disc_factors) {
  return overramified_primes(g, disc_factors).empty();
}

bool nowhere_overramified(const BinaryQuarticForm& g) {
  i128 disc = quartic_discriminant(g);
  if (disc == 0) throw std::invalid_argument("nowhere_overramified: zero discriminant");
  Factorization f = factor(disc);
  if (!f.complete()) throw std::runtime_error("nowhere_overramified: could not factor disc " + to_string(disc));
  return nowhere_overramified(g, f);
}

bool binary_form_maximal_at(const std::vector<i128>& coeffs, std::uint64_t p) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<i128> asc(coeffs.rbegin(), coeffs.rend());
  FpPoly G = FpPoly::from_integers(asc, p);
  if (G.is_zero()) return false;
  const u128 p2 = static_cast<u128>(p) * p;
  auto mod_p2 = [&](i128 x) {
    i128 m = static_cast<i128>(p2);
    i128 r = x % m;
    return static_cast<u128>(r < 0 ? r + m : r);
  };
  if (n - G.degree() >= 2 && mod_p2(coeffs[0]) == 0) return false;
  for (const auto& [r, mult] : roots_with_multiplicity(G)) {
    if (mult < 2) continue;
    // Any lift works: the derivative vanishes mod p at a multiple root.
    u128 v = 0;
    for (int i = 0; i <= n; ++i) v = (v * r + mod_p2(coeffs[i])) % p2;
    if (v == 0) return false;
  }
  return true;
}

bool ring_maximal_at(const BinaryQuarticForm& g, std::uint64_t p) {
  return binary_form_maximal_at({g.a, g.b, g.c, g.d, g.e}, p);
}

SearchBox search_box(i128 I, i128 J, const OrbitSearchOptions& opt) {
  long double h4 = static_cast<long double>(height_times_4(I, J));
  long double h6 = std::pow(h4 / 4, 1.0L / 6);
  auto bound = [&](double k) {
    long double v = std::floor(k * opt.safety * h6);
    return static_cast<i128>(std::max<long double>(v, 1));
  };
  SearchBox box{bound(opt.k_c), bound(opt.k_d), bound(opt.k_e)};
  long double size = static_cast<long double>(2 * box.C + 1) * static_cast<long double>(box.D + 1) *
                     static_cast<long double>(2 * box.E);
  if (size > static_cast<long double>(opt.max_box))
    throw BoundOverflow("orbit search box too large for (I, J) = (" + to_string(I) + ", " + to_string(J) + ")");
  return box;
}

namespace {

// Cheap filter before the integer square root: squares mod 64, 63, 65, 11.
struct SquareFilter {
  bool m64[64]{}, m63[63]{}, m65[65]{}, m11[11]{};
  SquareFilter() {
    for (int i = 0; i < 64; ++i) m64[i * i % 64] = true;
    for (int i = 0; i < 63; ++i) m63[i * i % 63] = true;
    for (int i = 0; i < 65; ++i) m65[i * i % 65] = true;
    for (int i = 0; i < 11; ++i) m11[i * i % 11] = true;
  }
  template <class T>
  bool maybe_square(T n) const {
    return m64[static_cast<int>(n & 63)] && m63[static_cast<int>(n % 63)] && m65[static_cast<int>(n % 65)] &&
           m11[static_cast<int>(n % 11)];
  }
};

const SquareFilter kSquares;

// T is i128, or std::int64_t when the caller has checked that every
// intermediate fits.
template <class T>
void scan_box(T I, T J, T C, T D, T E, std::vector<BinaryQuarticForm>& out) {
  for (T e = -E; e <= E; ++e) {
    if (e == 0) continue;
    const T A2 = -108 * e * e;
    for (T d = 0; d <= D; ++d) {
      const T d2 = d * d;
      for (T c = -C; c <= C; ++c) {
        // With a = (I - c^2 + 3bd) / (12e), J becomes A2 b^2 + B1 b + C0 = 0.
        const T c2 = c * c;
        const T B1 = 108 * e * d * c - 27 * d2 * d;
        const T C0 = 24 * e * c * I - 32 * e * c2 * c - 9 * d2 * (I - c2) - 4 * e * J;
        const T disc = B1 * B1 - 4 * A2 * C0;
        if (disc < 0 || !kSquares.maybe_square(disc)) continue;
        const T s = static_cast<T>(isqrt(static_cast<u128>(disc)));
        if (s * s != disc) continue;
        for (int sign : {1, -1}) {
          if (sign == -1 && s == 0) break;
          const T num = -B1 + sign * s;
          if (num % (2 * A2) != 0) continue;
          const T b = num / (2 * A2);
          const T anum = I - c2 + 3 * b * d;
          if (anum % (12 * e) != 0) continue;
          out.push_back({static_cast<i128>(anum / (12 * e)), static_cast<i128>(b), static_cast<i128>(c),
                         static_cast<i128>(d), static_cast<i128>(e)});
        }
      }
    }
  }
}

}  // namespace

std::vector<BinaryQuarticForm> forms_in_box(i128 I, i128 J, const SearchBox& box) {
  std::vector<BinaryQuarticForm> raw, out;
  // Rough size of the largest intermediate (B1^2 and 4 A2 C0).
  long double C = static_cast<long double>(box.C), D = static_cast<long double>(box.D);
  long double E = static_cast<long double>(box.E);
  long double LI = std::fabs(static_cast<long double>(I)), LJ = std::fabs(static_cast<long double>(J));
  long double B1 = 108 * E * D * C + 27 * D * D * D;
  long double C0 = 24 * E * C * LI + 32 * E * C * C * C + 9 * D * D * (LI + C * C) + 4 * E * LJ;
  long double worst = B1 * B1 + 432 * E * E * C0;
  if (worst < 0x1p61L)
    scan_box<std::int64_t>(static_cast<std::int64_t>(I), static_cast<std::int64_t>(J),
                           static_cast<std::int64_t>(box.C), static_cast<std::int64_t>(box.D),
                           static_cast<std::int64_t>(box.E), raw);
  else if (worst < 0x1p125L)
    scan_box<i128>(I, J, box.C, box.D, box.E, raw);
  else
    throw BoundOverflow("forms_in_box: coefficients too large");
  for (const auto& g : raw) {
    if (quartic_invariants(g) != QuarticInvariants{I, J}) throw std::logic_error("forms_in_box: invariant mismatch");
    if (has_linear_factor(g)) continue;
    out.push_back(g);
  }
  return out;
}

QuarticOrbitSet orbits_with_invariants(i128 I, i128 J, const Factorization& disc_factors,
                                       const OrbitSearchOptions& opt) {
  i128 num = checked_sub(checked_mul(4, checked_pow(I, 3)), checked_mul(J, J));
  if (num == 0) throw std::invalid_argument("orbits_with_invariants: zero discriminant");
  QuarticOrbitSet out;
  out.invariants = {I, J};
  if (num % 27 != 0) return out;
  std::set<BinaryQuarticForm> reps;
  for (const auto& g : forms_in_box(I, J, search_box(I, J, opt))) reps.insert(reduce(g));
  for (const auto& rep : reps) {
    QuarticOrbit o;
    o.rep = rep;
    o.irreducible = is_irreducible_quartic(rep);
    o.overramified_at = overramified_primes(rep, disc_factors);
    o.nowhere_overramified = o.overramified_at.empty();
    o.ring_maximal = true;
    for (const auto& [p, e] : disc_factors.factors)
      if (e >= 2 && !ring_maximal_at(rep, p)) o.ring_maximal = false;
    o.real_roots = real_root_count(rep);
    out.orbits.push_back(std::move(o));
  }
  return out;
}

QuarticOrbitSet orbits_with_invariants(i128 I, i128 J, const OrbitSearchOptions& opt) {
  i128 num = checked_sub(checked_mul(4, checked_pow(I, 3)), checked_mul(J, J));
  if (num == 0) throw std::invalid_argument("orbits_with_invariants: zero discriminant");
  if (num % 27 != 0) return {{I, J}, {}};
  Factorization f = factor(num / 27);
  if (!f.complete()) throw std::runtime_error("orbits_with_invariants: could not factor the discriminant");
  return orbits_with_invariants(I, J, f, opt);
}

}  // namespace moncubic
