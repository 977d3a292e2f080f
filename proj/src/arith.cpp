#include "moncubic/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moncubic {

// ---------------------------------------------------------------- int128 ---

u128 isqrt(u128 n) {
  if (n == 0) return 0;
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && (r > n / r)) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

u128 icbrt(u128 n) {
  if (n == 0) return 0;
  u128 r = static_cast<u128>(std::cbrt(static_cast<long double>(n)));
  auto cube_le = [n](u128 x) {
    if (x == 0) return true;
    if (x > n / x) return false;
    u128 sq = x * x;
    return sq <= n / x;
  };
  while (r > 0 && !cube_le(r)) --r;
  while (cube_le(r + 1)) ++r;
  return r;
}

bool is_perfect_square(i128 n) {
  if (n < 0) return false;
  u128 r = isqrt(static_cast<u128>(n));
  return r * r == static_cast<u128>(n);
}

std::string to_string(i128 x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  u128 v = neg ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

i128 parse_i128(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("malformed integer");
  i128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer: " + std::string(s));
    // Accumulate with the sign so the most negative value parses.
    v = checked_add(checked_mul(v, 10), neg ? -(s[i] - '0') : s[i] - '0');
  }
  return v;
}

// ------------------------------------------------------------ modular ------

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t x, std::uint64_t m) {
  i128 a = x % m, b = m, u = 1, v = 0;
  while (b != 0) {
    i128 q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) throw std::domain_error("invmod: not invertible");
  return static_cast<std::uint64_t>(floor_mod(u, m));
}

std::uint64_t reduce_mod(i128 x, std::uint64_t m) {
  return static_cast<std::uint64_t>(floor_mod(x, static_cast<i128>(m)));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(n + 1, true);
  sieve[0] = sieve[1] = false;
  for (std::uint64_t i = 2; i * i <= n; ++i)
    if (sieve[i])
      for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
  for (std::uint64_t i = 2; i <= n; ++i)
    if (sieve[i]) out.push_back(i);
  return out;
}

int Factorization::exponent_of(std::uint64_t p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
std::uint64_t rho(std::uint64_t n, std::uint64_t& budget) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1; c < 64 && budget > 0; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += lim;
        budget = budget > lim ? budget - lim : 0;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void split64(std::uint64_t n, std::vector<std::uint64_t>& primes, std::vector<std::uint64_t>& stuck,
             std::uint64_t& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  std::uint64_t d = rho(n, budget);
  if (d == 0) {
    stuck.push_back(n);
    return;
  }
  split64(d, primes, stuck, budget);
  split64(n / d, primes, stuck, budget);
}

}  // namespace

Factorization factor(i128 n, const FactorOptions& opt) {
  if (n == 0) throw std::invalid_argument("factor(0)");
  u128 m = static_cast<u128>(abs128(n));
  Factorization out;
  auto push = [&out](std::uint64_t p, int e) {
    for (auto& [q, k] : out.factors)
      if (q == p) {
        k += e;
        return;
      }
    out.factors.emplace_back(p, e);
  };
  for (std::uint64_t p = 2; p <= opt.trial_bound; p += (p == 2 ? 1 : 2)) {
    if (static_cast<u128>(p) * p > m) break;
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      push(p, e);
    }
  }
  if (m > 1) {
    if (m <= UINT64_MAX) {
      std::uint64_t m64 = static_cast<std::uint64_t>(m);
      if (static_cast<u128>(opt.trial_bound) * opt.trial_bound >= m || is_prime(m64)) {
        push(m64, 1);
        m = 1;
      } else {
        std::vector<std::uint64_t> ps, stuck;
        std::uint64_t budget = opt.rho_step_budget;
        split64(m64, ps, stuck, budget);
        for (auto p : ps) push(p, 1);
        u128 rest = 1;
        for (auto s : stuck) rest *= s;
        m = rest;
      }
    }
  }
  out.cofactor = m;
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

int valuation(i128 n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of 0");
  int v = 0;
  i128 pp = static_cast<i128>(p);
  while (n % pp == 0) {
    n /= pp;
    ++v;
  }
  return v;
}

std::vector<i128> positive_divisors(const Factorization& f) {
  if (!f.complete()) throw std::invalid_argument("divisors of an incomplete factorization");
  std::vector<i128> divs{1};
  for (const auto& [p, e] : f.factors) {
    std::size_t base = divs.size();
    i128 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk = checked_mul(pk, static_cast<i128>(p));
      for (std::size_t i = 0; i < base; ++i) divs.push_back(checked_mul(divs[i], pk));
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// --------------------------------------------------------------- FpPoly ----

FpPoly::FpPoly(std::vector<std::uint64_t> coeffs, std::uint64_t p) : c_(std::move(coeffs)), p_(p) {
  for (auto& x : c_) x %= p_;
  trim();
}

FpPoly FpPoly::from_integers(const std::vector<i128>& coeffs, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(coeffs.size());
  for (i128 x : coeffs) c.push_back(reduce_mod(x, p));
  return FpPoly(std::move(c), p);
}

FpPoly FpPoly::x(std::uint64_t p) { return FpPoly({0, 1}, p); }
FpPoly FpPoly::constant(std::uint64_t c, std::uint64_t p) { return FpPoly({c}, p); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r[i] = s >= p_ ? s - p_ : s;
  }
  return FpPoly(std::move(r), p_);
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = coeff(static_cast<int>(i)), y = o.coeff(static_cast<int>(i));
    r[i] = x >= y ? x - y : x + (p_ - y);
  }
  return FpPoly(std::move(r), p_);
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly({}, p_);
  std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
  return FpPoly(std::move(r), p_);
}

FpPoly FpPoly::scaled(std::uint64_t s) const {
  std::vector<std::uint64_t> r(c_);
  for (auto& x : r) x = mulmod(x, s % p_, p_);
  return FpPoly(std::move(r), p_);
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(invmod(leading(), p_));
}

FpPoly FpPoly::derivative() const {
  std::vector<std::uint64_t> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(mulmod(c_[i], i % p_, p_));
  return FpPoly(std::move(r), p_);
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
  std::uint64_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = (mulmod(r, x, p_) + c_[i]) % p_;
  return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.is_zero()) throw std::domain_error("FpPoly division by zero");
  std::vector<std::uint64_t> rem(c_);
  int dd = d.degree();
  if (degree() < dd) return {FpPoly({}, p_), *this};
  std::vector<std::uint64_t> q(degree() - dd + 1, 0);
  std::uint64_t inv = invmod(d.leading(), p_);
  for (int i = degree(); i >= dd; --i) {
    std::uint64_t coef = mulmod(rem[i], inv, p_);
    q[i - dd] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      std::uint64_t t = mulmod(coef, d.c_[j], p_);
      std::uint64_t& slot = rem[i - dd + j];
      slot = slot >= t ? slot - t : slot + (p_ - t);
    }
  }
  return {FpPoly(std::move(q), p_), FpPoly(std::move(rem), p_)};
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly powmod(const FpPoly& base, u128 e, const FpPoly& m) {
  FpPoly result = FpPoly::constant(1, m.modulus()) % m;
  FpPoly b = base % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

namespace {

// For f with f' = 0: f = g(x^p) = g(x)^p over F_p.
FpPoly pth_root(const FpPoly& f) {
  std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> r;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) r.push_back(f.coeff(i));
  return FpPoly(std::move(r), p);
}

}  // namespace

FpPoly radical(const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("radical of zero");
  if (f.degree() <= 0) return FpPoly::constant(1, f.modulus());
  FpPoly d = f.derivative();
  if (d.is_zero()) return radical(pth_root(f));
  FpPoly g = gcd(f, d);
  FpPoly w = (f / g).monic();  // squarefree
  FpPoly rg = radical(g);
  FpPoly common = gcd(w, rg);
  return (w * (rg / common)).monic();
}

int distinct_root_count(const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("root count of zero");
  std::uint64_t p = f.modulus();
  if (p < 1024) {
    int n = 0;
    for (std::uint64_t x = 0; x < p; ++x)
      if (f.eval(x) == 0) ++n;
    return n;
  }
  FpPoly xp = powmod(FpPoly::x(p), p, f);
  return gcd(f, xp - FpPoly::x(p)).degree();
}

namespace {

// Roots of a squarefree product of distinct linear factors (p odd, large).
void split_linear(const FpPoly& g, std::vector<std::uint64_t>& out) {
  std::uint64_t p = g.modulus();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    FpPoly m = g.monic();
    out.push_back((p - m.coeff(0)) % p);
    return;
  }
  for (std::uint64_t delta = 0;; ++delta) {
    FpPoly shifted({delta, 1}, p);
    FpPoly t = powmod(shifted, (p - 1) / 2, g) - FpPoly::constant(1, p);
    FpPoly h = gcd(g, t);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, out);
      split_linear(g / h, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> roots_with_multiplicity(const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("roots of zero");
  std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> roots;
  if (p < 1024) {
    for (std::uint64_t x = 0; x < p; ++x)
      if (f.eval(x) == 0) roots.push_back(x);
  } else {
    FpPoly xp = powmod(FpPoly::x(p), p, f);
    FpPoly g = gcd(f, xp - FpPoly::x(p));
    split_linear(g, roots);
    std::sort(roots.begin(), roots.end());
  }
  std::vector<std::pair<std::uint64_t, int>> out;
  for (auto r : roots) {
    FpPoly lin({(p - r) % p, 1}, p);
    FpPoly cur = f;
    int m = 0;
    while (cur.degree() >= 1) {
      auto [q, rem] = cur.divmod(lin);
      if (!rem.is_zero()) break;
      cur = q;
      ++m;
    }
    out.emplace_back(r, m);
  }
  return out;
}

bool dedekind_maximal(const std::vector<i128>& monic_coeffs, std::uint64_t p) {
  if (monic_coeffs.empty() || monic_coeffs.back() != 1) throw std::invalid_argument("dedekind: polynomial must be monic");
  if (p >= (1ull << 61)) throw std::invalid_argument("dedekind: prime too large");
  FpPoly fbar = FpPoly::from_integers(monic_coeffs, p);
  FpPoly g = radical(fbar);
  FpPoly h = fbar / g;
  // Lift g and h to integer polynomials with coefficients in [0, p).
  const auto& gc = g.coeffs();
  const auto& hc = h.coeffs();
  std::vector<i128> prod(gc.size() + hc.size() - 1, 0);
  for (std::size_t i = 0; i < gc.size(); ++i)
    for (std::size_t j = 0; j < hc.size(); ++j) prod[i + j] += static_cast<i128>(gc[i]) * static_cast<i128>(hc[j]);
  std::vector<i128> t(std::max(prod.size(), monic_coeffs.size()), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    i128 a = i < prod.size() ? prod[i] : 0;
    i128 b = i < monic_coeffs.size() ? monic_coeffs[i] : 0;
    i128 diff = a - b;
    if (diff % static_cast<i128>(p) != 0) throw std::logic_error("dedekind: g*h != f mod p");
    t[i] = diff / static_cast<i128>(p);
  }
  FpPoly tbar = FpPoly::from_integers(t, p);
  FpPoly common = gcd(g, h);
  if (common.degree() == 0) return true;
  return gcd(tbar, common).degree() == 0;
}

}  // namespace moncubic
