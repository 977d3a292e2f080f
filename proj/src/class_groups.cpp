#include "moncubic/class_groups.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <tuple>
#include <stdexcept>

#include "moncubic/numeric.hpp"

namespace moncubic {

std::string_view to_string(ClassMethod m) {
  switch (m) {
    case ClassMethod::Quartic: return "quartic";
    case ClassMethod::Direct: return "direct";
    case ClassMethod::BothAgree: return "both_agree";
    case ClassMethod::BothDisagree: return "both_disagree";
  }
  return "?";
}

namespace {

// Incremental row echelon basis over F_2.
class F2Space {
 public:
  explicit F2Space(std::size_t bits) : words_((bits + 63) / 64) {}
  void insert(std::vector<std::uint64_t> v) {
    for (const auto& [bit, row] : rows_) {
      if (v[bit / 64] >> (bit % 64) & 1)
        for (std::size_t w = 0; w < words_; ++w) v[w] ^= row[w];
    }
    for (std::size_t w = 0; w < words_; ++w) {
      if (v[w] == 0) continue;
      std::size_t bit = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
      // Keep the basis reduced at the new pivot.
      for (auto& [b, row] : rows_)
        if (row[bit / 64] >> (bit % 64) & 1)
          for (std::size_t k = 0; k < words_; ++k) row[k] ^= v[k];
      rows_.emplace_back(bit, std::move(v));
      return;
    }
  }
  std::size_t rank() const { return rows_.size(); }
  std::size_t words() const { return words_; }

 private:
  std::size_t words_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows_;
};

// Upper triangular Hermite basis of an integer lattice, reduced modulo its
// determinant once it has full rank.
class HermiteLattice {
 public:
  explicit HermiteLattice(std::size_t n) : n_(n), rows_(n) {}

  void insert(std::vector<mpz_class> v) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (full_) reduce_vec(v, i);
      if (v[i] == 0) continue;
      if (rows_[i].empty()) {
        if (v[i] < 0)
          for (auto& x : v) x = -x;
        rows_[i] = std::move(v);
        ++rank_;
        if (rank_ == n_) on_full_rank();
        return;
      }
      auto& r = rows_[i];
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r[i].get_mpz_t(), v[i].get_mpz_t());
      mpz_class ri = r[i] / g, vi = v[i] / g;
      std::vector<mpz_class> nr(n_), nv(n_);
      for (std::size_t j = i; j < n_; ++j) {
        nr[j] = s * r[j] + t * v[j];
        nv[j] = ri * v[j] - vi * r[j];
      }
      r = std::move(nr);
      v = std::move(nv);
      if (full_) {
        reduce_vec(r, i + 1);
        update_det();
      }
    }
  }

  bool full() const { return full_; }
  const mpz_class& det() const { return det_; }
  const std::vector<std::vector<mpz_class>>& rows() const { return rows_; }

 private:
  void reduce_vec(std::vector<mpz_class>& v, std::size_t from) const {
    for (std::size_t j = from; j < n_; ++j) {
      if (v[j] == 0) continue;
      mpz_fdiv_r(v[j].get_mpz_t(), v[j].get_mpz_t(), det_.get_mpz_t());
    }
  }
  void update_det() {
    det_ = 1;
    for (std::size_t i = 0; i < n_; ++i) det_ *= rows_[i][i];
  }
  void on_full_rank() {
    full_ = true;
    update_det();
    for (std::size_t i = 0; i < n_; ++i) reduce_vec(rows_[i], i + 1);
  }

  std::size_t n_;
  std::vector<std::vector<mpz_class>> rows_;
  std::size_t rank_ = 0;
  bool full_ = false;
  mpz_class det_ = 0;
};

// Elementary divisors (> 1) of Z^k modulo the rows of m and h Z^k.
std::vector<mpz_class> smith_divisors(std::vector<std::vector<mpz_class>> m, std::size_t k, const mpz_class& h) {
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<mpz_class> row(k, 0);
    row[i] = h;
    m.push_back(row);
  }
  std::vector<mpz_class> diag;
  std::size_t rows = m.size();
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // Smallest nonzero entry in the remaining block becomes the pivot.
      std::size_t pr = rows, pc = k;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < k; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;  // cannot happen with the h rows present
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        if (q != 0)
          for (std::size_t j = t; j < k; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < k; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < k; ++c) m[t][c] += m[i][c];
            divisible = false;
            break;
          }
      if (!divisible) continue;
      break;
    }
    mpz_class d = abs(m[t][t]);
    if (d > 1) diag.push_back(d);
  }
  return diag;
}

// Integer echelon form of the relation vectors that also carries the log
// embedding of each row. A row that reduces to zero is a unit.
// Log vectors of units with a bound on the error in each coordinate.
struct UnitLog {
  std::vector<long double> logs;
  long double err = 0;
};

// Logs are carried either in long double or, when coefficient growth makes
// that useless, in multiprecision floats.
constexpr mp_bitcnt_t kPreciseBits = 512;

long double lift(i128 k, long double) { return static_cast<long double>(k); }
mpf_class lift(i128 k, const mpf_class&) {
  mpz_class z = static_cast<std::int64_t>(k >> 64);
  z <<= 64;
  z += mpz_class(std::to_string(static_cast<std::uint64_t>(k & 0xFFFFFFFFFFFFFFFFULL)));
  return mpf_class(z, kPreciseBits);
}
long double lower(long double x) { return x; }
long double lower(const mpf_class& x) { return x.get_d(); }

template <class T>
class UnitTracker {
 public:
  // Units with a log coordinate above max_log are dropped. log_eps bounds
  // the relative error of the logs of a single element.
  UnitTracker(std::size_t n, long double max_log, long double log_eps)
      : n_(n), max_log_(max_log), log_eps_(log_eps), pivots_(n) {}

  void insert(const std::vector<int>& v, std::vector<T> logs) {
    long double start = 0;
    for (const auto& x : logs) start = std::max(start, std::fabs(lower(x)));
    Row r{std::vector<i128>(v.begin(), v.end()), std::move(logs), log_eps_ * (1 + start)};
    try {
      for (std::size_t c = 0; c < n_; ++c) {
        if (r.v[c] == 0) continue;
        auto& P = pivots_[c];
        if (!P) {
          P = std::move(r);
          return;
        }
        if (r.v[c] % P->v[c] == 0) {
          axpy(r, -(r.v[c] / P->v[c]), *P);
          continue;
        }
        auto [g, s, t] = ext_gcd(P->v[c], r.v[c]);
        Row np = combine(s, *P, t, r);
        // Eliminates column c with the opposite sign convention.
        Row nr = combine(-(r.v[c] / g), *P, P->v[c] / g, r);
        *P = std::move(np);
        r = std::move(nr);
      }
    } catch (const std::overflow_error&) {
      return;  // coefficient growth; drop the row
    }
    UnitLog u;
    long double size = 0;
    for (const auto& x : r.logs) {
      u.logs.push_back(lower(x));
      size = std::max(size, std::fabs(u.logs.back()));
    }
    // Conversion to long double (or double) adds its own rounding.
    u.err = r.err + 1e-15L * size;
    // Rows built from large multiples of pivots lose the logs to rounding.
    if (size < 1e-6L || size > max_log_ || u.err > 1e-4L) return;
    units_.push_back(std::move(u));
  }

  const std::vector<UnitLog>& units() const { return units_; }

 private:
  struct Row {
    std::vector<i128> v;
    std::vector<T> logs;
    long double err = 0;  // bound on the error in each log coordinate
  };
  static void axpy(Row& r, i128 k, const Row& p) {
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = checked_add(r.v[i], checked_mul(k, p.v[i]));
    for (std::size_t i = 0; i < r.logs.size(); ++i) r.logs[i] += lift(k, r.logs[i]) * p.logs[i];
    r.err += std::fabs(static_cast<long double>(k)) * p.err;
  }
  static Row combine(i128 a, const Row& x, i128 b, const Row& y) {
    Row out{std::vector<i128>(x.v.size()), x.logs, 0};
    for (std::size_t i = 0; i < x.v.size(); ++i)
      out.v[i] = checked_add(checked_mul(a, x.v[i]), checked_mul(b, y.v[i]));
    for (std::size_t i = 0; i < x.logs.size(); ++i)
      out.logs[i] = lift(a, x.logs[i]) * x.logs[i] + lift(b, y.logs[i]) * y.logs[i];
    out.err = std::fabs(static_cast<long double>(a)) * x.err + std::fabs(static_cast<long double>(b)) * y.err;
    return out;
  }
  static std::tuple<i128, i128, i128> ext_gcd(i128 a, i128 b) {
    i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      i128 q = old_r / r;
      std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
      std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
      std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
    }
    return {old_r, old_s, old_t};
  }

  std::size_t n_;
  long double max_log_, log_eps_;
  std::vector<std::optional<Row>> pivots_;
  std::vector<UnitLog> units_;
};

// log|x| at the first `count` real embeddings, to kPreciseBits. Roots are
// refined by Newton from the long double ones.
class PreciseLogs {
 public:
  PreciseLogs(const CubicField& K, int count) {
    const auto& f = K.form();
    mpf_class a(mpz_class(to_string(f.a)), kPreciseBits), b(mpz_class(to_string(f.b)), kPreciseBits),
        c(mpz_class(to_string(f.c)), kPreciseBits);
    for (int i = 0; i < count; ++i) {
      mpf_class t(static_cast<double>(K.embeddings()[static_cast<std::size_t>(i)].real()), kPreciseBits);
      mpf_class v(0, kPreciseBits), d(0, kPreciseBits);
      // Quadratic convergence from about 50 correct bits.
      for (int it = 0; it < 8; ++it) {
        v = ((t + a) * t + b) * t + c;
        d = (3 * t + 2 * a) * t + b;
        t -= v / d;
      }
      roots_.push_back(t);
    }
    ln2_ = mpf_class(0, kPreciseBits);
    ln2_ = 2 * atanh_series(mpf_class(1, kPreciseBits) / 3);
  }

  std::vector<mpf_class> operator()(const Element& x) const {
    std::vector<mpf_class> out;
    mpf_class y(0, kPreciseBits);
    for (const auto& t : roots_) {
      y = (lift(x[2], t) * t + lift(x[1], t)) * t + lift(x[0], t);
      out.push_back(log_abs(y));
    }
    return out;
  }

 private:
  static mpf_class atanh_series(const mpf_class& z) {
    mpf_class sum(z, kPreciseBits), term(z, kPreciseBits), z2(z * z, kPreciseBits), eps(1, kPreciseBits);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), kPreciseBits + 8);
    for (unsigned long k = 3; abs(term) > eps; k += 2) {
      term *= z2;
      sum += term / k;
    }
    return sum;
  }
  mpf_class log_abs(const mpf_class& y) const {
    mpf_class m(abs(y), kPreciseBits);
    long e = 0;
    mpf_get_d_2exp(&e, m.get_mpf_t());
    if (e > 0) mpf_div_2exp(m.get_mpf_t(), m.get_mpf_t(), static_cast<mp_bitcnt_t>(e));
    if (e < 0) mpf_mul_2exp(m.get_mpf_t(), m.get_mpf_t(), static_cast<mp_bitcnt_t>(-e));
    // m in [1/2, 1)
    mpf_class r(0, kPreciseBits);
    r = 2 * atanh_series((m - 1) / (m + 1));
    r += ln2_ * e;
    return r;
  }

  std::vector<mpf_class> roots_;
  mpf_class ln2_;
};

// Smallest q <= q_max with every q c_i within tol q of an integer, or 0.
// The search stops early enough that a noise value rarely matches by chance.
i128 small_denominator(std::initializer_list<long double> cs, long double tol) {
  i128 q_max = std::min<i128>(10000, static_cast<i128>(std::sqrt(1e-4L / tol)));
  for (i128 q = 2; q <= q_max; ++q) {
    bool all = true;
    for (long double c : cs) {
      long double u = c * static_cast<long double>(q);
      all = all && std::fabs(u - std::nearbyint(u)) < tol * static_cast<long double>(q);
    }
    if (all) return q;
  }
  return 0;
}

// Values whose coordinates in the current basis are known to worse than
// this are skipped rather than risk a wrong snap.
constexpr long double kMaxCoordError = 1e-7L;

// Rank one: the generator t of Z u_1 + Z u_2 + ..., accepting only values
// that are rational multiples of t with small denominator.
class UnitLattice1 {
 public:
  void add(long double x, long double err) {
    x = std::fabs(x);
    // No unit of a cubic field has a log this small; it is rounding noise.
    if (x < 0.2L) return;
    if (t_ == 0) {
      t_ = x;
      err_ = err;
      return;
    }
    long double c = x / t_;
    long double unc = (err + c * err_) / t_;
    if (unc > kMaxCoordError) return;
    long double tol = std::max(1e-9L, 2 * unc);
    c -= std::nearbyint(c);
    if (std::fabs(c) < tol) return;
    i128 q = small_denominator({c}, tol);
    if (q == 0) return;
    t_ /= static_cast<long double>(q);
    err_ /= static_cast<long double>(q);
  }
  long double generator() const { return t_; }

 private:
  long double t_ = 0, err_ = 0;
};

// Lattice in R^2 generated by the vectors added so far. A new vector is
// written in the current basis; its coordinates have a small common
// denominator q, and the enlarged lattice is read off an integer Hermite form.
class UnitLattice2 {
 public:
  void add(long double x, long double y, long double err) {
    if (std::hypot(x, y) < 0.2L) return;
    if (!have1_) {
      b1_ = {x, y};
      be_ = err;
      have1_ = true;
      return;
    }
    if (!have2_) {
      long double d = b1_[0] * y - b1_[1] * x;
      if (std::fabs(d) < 1e-6L * std::hypot(x, y) * std::hypot(b1_[0], b1_[1])) {
        // Parallel to b1: the one dimensional case along b1.
        long double len = std::hypot(b1_[0], b1_[1]);
        long double c = std::hypot(x, y) / len;
        long double unc = (err + c * be_) / len;
        if (unc > kMaxCoordError) return;
        long double tol = std::max(1e-9L, 2 * unc);
        c -= std::nearbyint(c);
        if (std::fabs(c) < tol) return;
        i128 q = small_denominator({c}, tol);
        if (q == 0) return;
        for (auto& v : b1_) v /= static_cast<long double>(q);
        be_ /= static_cast<long double>(q);
        return;
      }
      b2_ = {x, y};
      be_ = std::max(be_, err);
      have2_ = true;
      gauss();
      return;
    }
    long double det = b1_[0] * b2_[1] - b1_[1] * b2_[0];
    long double c1 = (x * b2_[1] - y * b2_[0]) / det;
    long double c2 = (b1_[0] * y - b1_[1] * x) / det;
    // Entries of the inverse basis are bounded by this.
    long double inv = std::max({std::fabs(b1_[0]), std::fabs(b1_[1]), std::fabs(b2_[0]), std::fabs(b2_[1])}) /
                      std::fabs(det);
    long double unc = 2 * inv * (err + (std::fabs(c1) + std::fabs(c2)) * be_);
    if (unc > kMaxCoordError) return;
    const long double tol = std::max(1e-9L, 2 * unc);
    c1 -= std::nearbyint(c1);
    c2 -= std::nearbyint(c2);
    if (std::fabs(c1) < tol && std::fabs(c2) < tol) return;
    i128 q = small_denominator({c1, c2}, tol);
    if (q == 0) return;  // not a lattice vector to working precision
    i128 a1 = static_cast<i128>(std::nearbyint(c1 * static_cast<long double>(q)));
    i128 a2 = static_cast<i128>(std::nearbyint(c2 * static_cast<long double>(q)));
    // Hermite form of the rows (q, 0), (0, q), (a1, a2). First column:
    // t a1 = g mod q gives the top row (g, t a2).
    i128 t = 0, g = 0;
    {
      i128 old_r = q, r = a1, old_t = 0, tt = 1;
      while (r != 0) {
        i128 k = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, old_r - k * r);
        std::tie(old_t, tt) = std::make_tuple(tt, old_t - k * tt);
      }
      if (old_r < 0) {
        old_r = -old_r;
        old_t = -old_t;
      }
      g = old_r;
      t = old_t;
    }
    i128 top2 = t * a2;
    // (q/g)(a1, a2) - (a1/g)(q, 0) = (0, (q/g) a2), together with (0, q).
    i128 s2 = gcd128(q, (q / g) * a2);
    if (s2 < 0) s2 = -s2;
    std::array<long double, 2> n1, n2;
    long double lq = static_cast<long double>(q);
    for (int i = 0; i < 2; ++i) {
      n1[i] = (static_cast<long double>(g) * b1_[i] + static_cast<long double>(top2) * b2_[i]) / lq;
      n2[i] = static_cast<long double>(s2) * b2_[i] / lq;
    }
    be_ *= std::max(static_cast<long double>(g + abs128(top2)), static_cast<long double>(s2)) / lq;
    b1_ = n1;
    b2_ = n2;
    gauss();
  }

  long double covolume() const {
    if (!have2_) return 0;
    return std::fabs(b1_[0] * b2_[1] - b1_[1] * b2_[0]);
  }

 private:
  void gauss() {
    for (int it = 0; it < 100; ++it) {
      long double n1 = b1_[0] * b1_[0] + b1_[1] * b1_[1];
      long double n2 = b2_[0] * b2_[0] + b2_[1] * b2_[1];
      if (n2 < n1) {
        std::swap(b1_, b2_);
        std::swap(n1, n2);
      }
      long double m = std::nearbyint((b1_[0] * b2_[0] + b1_[1] * b2_[1]) / n1);
      if (m == 0) return;
      be_ *= 1 + std::fabs(m);
      b2_[0] -= m * b1_[0];
      b2_[1] -= m * b1_[1];
    }
  }

  bool have1_ = false, have2_ = false;
  std::array<long double, 2> b1_{}, b2_{};
  long double be_ = 0;  // error bound on the basis coordinates
};

struct ValuationTable {
  // Per factor-base rational prime.
  struct Entry {
    std::uint64_t p;
    EtaleType type;
    std::size_t first;  // index of its first ideal
    std::vector<std::uint64_t> lifted;  // p-adic lifts of simple roots, matching ideal order
    std::uint64_t modulus;              // p^k
    int precision;                      // k
  };
  std::vector<Entry> entries;
};

std::uint64_t eval_mod(const Element& x, std::uint64_t r, std::uint64_t m) {
  std::uint64_t v = reduce_mod(x[2], m);
  v = (mulmod(v, r, m) + reduce_mod(x[1], m)) % m;
  v = (mulmod(v, r, m) + reduce_mod(x[0], m)) % m;
  return v;
}

std::uint64_t hensel_lift(const MonicCubicForm& f, std::uint64_t r, std::uint64_t p, std::uint64_t m) {
  std::uint64_t x = r;
  for (int it = 0; it < 128; ++it) {
    std::uint64_t fx = (mulmod((mulmod((x + reduce_mod(f.a, m)) % m, x, m) + reduce_mod(f.b, m)) % m, x, m) +
                        reduce_mod(f.c, m)) %
                       m;
    if (fx == 0) break;
    std::uint64_t d = (mulmod(3, mulmod(x, x, m), m) + mulmod(mulmod(2, reduce_mod(f.a, m), m), x, m) +
                       reduce_mod(f.b, m)) %
                      m;
    std::uint64_t step = mulmod(fx, invmod(d, m), m);
    x = (x + m - step) % m;
  }
  (void)p;
  return x;
}

int padic_val(std::uint64_t v, std::uint64_t p, int k) {
  if (v == 0) return k;
  int n = 0;
  while (v % p == 0) {
    v /= p;
    ++n;
  }
  return n;
}

}  // namespace

DirectClassGroup direct_class_group(const MonicCubicForm& f, const DirectOptions& opt) {
  DirectClassGroup out;
  CubicField K(f);
  if (std::fabs(static_cast<long double>(K.disc())) > opt.disc_ceiling) {
    out.reason = "discriminant above the direct-method ceiling";
    return out;
  }
  const std::uint64_t bound =
      std::max<std::uint64_t>(static_cast<std::uint64_t>(std::ceil(K.minkowski_bound())), opt.min_factor_base);
  const auto primes = primes_up_to(bound);

  ValuationTable table;
  for (std::uint64_t p : primes) {
    auto ideals = K.primes_above(p);
    ValuationTable::Entry e{p, etale_type(f, p), out.factor_base.size(), {}, 1, 0};
    while (e.modulus <= (std::uint64_t{1} << 62) / p) {
      e.modulus *= p;
      ++e.precision;
    }
    for (const auto& P : ideals) {
      bool simple = P.has_root && !(e.type == EtaleType::RamQuad && P.e == 2) && e.type != EtaleType::RamCubic;
      e.lifted.push_back(simple ? hensel_lift(f, P.root, p, e.modulus) : 0);
      out.factor_base.push_back(P);
    }
    table.entries.push_back(std::move(e));
  }
  const std::size_t n = out.factor_base.size();
  const int r1 = K.r1();
  const int rank_units = K.r1() + K.r2() - 1;

  HermiteLattice lattice(n);
  F2Space narrow(n + static_cast<std::size_t>(r1));
  F2Space plain(n);
  auto f2_rows = [&](const std::vector<int>& v, unsigned signs) {
    std::vector<std::uint64_t> a(narrow.words(), 0), b(plain.words(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] & 1) {
        a[i / 64] |= std::uint64_t{1} << (i % 64);
        b[i / 64] |= std::uint64_t{1} << (i % 64);
      }
    for (int s = 0; s < r1; ++s)
      if (signs >> s & 1u) a[(n + s) / 64] |= std::uint64_t{1} << ((n + s) % 64);
    narrow.insert(std::move(a));
    plain.insert(std::move(b));
  };
  auto valuations = [&](const Element& x, i128 N, std::vector<int>& v) {
    std::fill(v.begin(), v.end(), 0);
    u128 rest = static_cast<u128>(abs128(N));
    for (const auto& e : table.entries) {
      int vp = 0;
      while (rest % e.p == 0) {
        rest /= e.p;
        ++vp;
      }
      if (vp == 0) continue;
      if (vp >= e.precision) return false;
      std::size_t i0 = e.first;
      switch (e.type) {
        case EtaleType::Split: {
          int sum = 0;
          for (std::size_t j = 0; j < 3; ++j) {
            v[i0 + j] = padic_val(eval_mod(x, e.lifted[j], e.modulus), e.p, e.precision);
            sum += v[i0 + j];
          }
          if (sum != vp) throw InternalError("direct_class_group: split valuations do not sum to the norm");
          break;
        }
        case EtaleType::UnramQuad: {
          int v1 = padic_val(eval_mod(x, e.lifted[0], e.modulus), e.p, e.precision);
          if (v1 > vp || (vp - v1) % 2 != 0) throw InternalError("direct_class_group: bad quadratic valuation");
          v[i0] = v1;
          v[i0 + 1] = (vp - v1) / 2;
          break;
        }
        case EtaleType::UnramCubic:
          if (vp % 3 != 0) throw InternalError("direct_class_group: inert norm exponent not divisible by 3");
          v[i0] = vp / 3;
          break;
        case EtaleType::RamQuad: {
          int v2 = padic_val(eval_mod(x, e.lifted[1], e.modulus), e.p, e.precision);
          if (v2 > vp) throw InternalError("direct_class_group: bad ramified valuation");
          v[i0] = vp - v2;
          v[i0 + 1] = v2;
          break;
        }
        case EtaleType::RamCubic:
          v[i0] = vp;
          break;
      }
    }
    return rest == 1;
  };

  const auto& basis = K.reduced_basis();
  long double analytic = -1;
  auto search = [&](auto& tracker, const auto& logs_of) {
    lattice = HermiteLattice(n);
    narrow = F2Space(n + static_cast<std::size_t>(r1));
    plain = F2Space(n);
    out.relations = 0;
    auto add_relation = [&](const std::vector<int>& v, unsigned signs, auto logs) {
      tracker.insert(v, std::move(logs));
      std::vector<mpz_class> row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = v[i];
      lattice.insert(std::move(row));
      f2_rows(v, signs);
      ++out.relations;
    };

    // (p) factors with exponents e over the ideals above p; -1 is a unit of every sign.
    for (const auto& e : table.entries) {
      std::vector<int> v(n, 0);
      for (std::size_t i = e.first; i < e.first + e.lifted.size(); ++i) v[i] = out.factor_base[i].e;
      add_relation(v, 0, logs_of(Element{static_cast<i128>(e.p), 0, 0}));
    }
    f2_rows(std::vector<int>(n, 0), (1u << r1) - 1);


    auto regulator = [&]() -> long double {
      // Most accurate first, so the basis starts out precise.
      auto units = tracker.units();
      std::stable_sort(units.begin(), units.end(), [](const UnitLog& x, const UnitLog& y) { return x.err < y.err; });
      if (rank_units == 1) {
        UnitLattice1 lat;
        for (const auto& u : units) lat.add(u.logs[0], u.err);
        return lat.generator();
      }
      UnitLattice2 lat;
      for (const auto& u : units) lat.add(u.logs[0], u.logs[1], u.err);
      return lat.covolume();
    };

    std::vector<int> v(n);
    i128 previous_h = 0;
    for (int R = 1; R <= opt.max_radius; ++R) {
      for (i128 u = -R; u <= R; ++u)
        for (i128 w1 = -R; w1 <= R; ++w1)
          for (i128 w2 = -R; w2 <= R; ++w2) {
            if (std::max({abs128(u), abs128(w1), abs128(w2)}) != R) continue;
            // Sign-normalize: first nonzero coordinate positive.
            i128 lead = u != 0 ? u : w1 != 0 ? w1 : w2;
            if (lead < 0) continue;
            if (gcd128(gcd128(u, w1), w2) != 1) continue;
            Element x{};
            for (int i = 0; i < 3; ++i)
              x[i] = checked_add(checked_add(checked_mul(u, basis[0][i]), checked_mul(w1, basis[1][i])),
                                 checked_mul(w2, basis[2][i]));
            i128 N = K.norm(x);
            if (!valuations(x, N, v)) continue;
            add_relation(v, K.sign_vector(x), logs_of(x));
          }
      if (!lattice.full() || R < 2) continue;
      if (!lattice.det().fits_slong_p()) continue;
      i128 h = lattice.det().get_si();
      long double reg = regulator();
      if (analytic < 0) analytic = K.analytic_hr(opt.euler_bound);
      long double ratio = static_cast<long double>(h) * reg / analytic;
      if (reg < 1e-3L) continue;
      bool ok = ratio >= 1 / opt.window && ratio <= opt.window;
      if (ok && h == previous_h) {
        out.determinate = true;
        out.h = h;
        out.regulator = reg;
        out.analytic_hr = analytic;
        break;
      }
      previous_h = ok ? h : 0;
    }
    out.units_found = tracker.units().size();
  };

  {
    UnitTracker<long double> tracker(n, 1e4L, 1e-16L);
    search(tracker, [&](const Element& x) { return K.log_embedding(x); });
  }
  if (!out.determinate) {
    // Large regulators need kernel vectors with huge coefficients.
    UnitTracker<mpf_class> tracker(n, 1e4L, 1e-140L);
    search(tracker, PreciseLogs(K, rank_units));
  }
  if (!out.determinate) {
    if (out.reason.empty()) out.reason = "relations did not stabilize within the search box";
    return out;
  }

  // Generators with pivot 1 are eliminated in favour of later ones; the
  // rest carry the group.
  const auto& H = lattice.rows();
  out.relation_matrix = H;
  mpz_class hz = lattice.det();
  std::vector<std::size_t> kept;
  std::vector<int> kept_index(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    if (H[i][i] != 1) {
      kept_index[i] = static_cast<int>(kept.size());
      kept.push_back(i);
    }
  const std::size_t k = kept.size();
  std::vector<std::vector<mpz_class>> expr(n, std::vector<mpz_class>(k, 0));
  for (std::size_t j = n; j-- > 0;) {
    if (kept_index[j] >= 0) {
      expr[j][static_cast<std::size_t>(kept_index[j])] = 1;
      continue;
    }
    for (std::size_t l = j + 1; l < n; ++l) {
      if (H[j][l] == 0) continue;
      for (std::size_t c = 0; c < k; ++c) expr[j][c] -= H[j][l] * expr[l][c];
    }
    for (auto& x : expr[j]) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), hz.get_mpz_t());
  }
  std::vector<std::vector<mpz_class>> block;
  for (std::size_t i : kept) {
    std::vector<mpz_class> rel(k, 0);
    for (std::size_t l = i; l < n; ++l) {
      if (H[i][l] == 0) continue;
      for (std::size_t c = 0; c < k; ++c) rel[c] += H[i][l] * expr[l][c];
    }
    for (auto& x : rel) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), hz.get_mpz_t());
    block.push_back(std::move(rel));
  }
  out.snf_diagonal = smith_divisors(block, k, hz);
  mpz_class prod = 1;
  int even = 0;
  for (const auto& d : out.snf_diagonal) {
    prod *= d;
    if (d % 2 == 0) ++even;
  }
  if (prod != hz) throw InternalError("direct_class_group: elementary divisors do not multiply to h");
  out.two_part = 1 << even;
  if (static_cast<std::size_t>(even) != n - plain.rank())
    throw InternalError("direct_class_group: 2-rank from Smith form and from F_2 rank disagree");
  out.narrow_two_part = 1 << (n + static_cast<std::size_t>(r1) - narrow.rank());
  return out;
}

int narrow_two_part_direct(const MonicCubicForm& f, const DirectClassGroup& dcg) {
  if (discriminant(f) < 0) throw std::invalid_argument("narrow_two_part_direct: field is not totally real");
  if (!dcg.determinate) throw std::invalid_argument("narrow_two_part_direct: direct computation is indeterminate");
  return dcg.narrow_two_part;
}

QuarticClassCounts quartic_class_counts(const MonicCubicForm& f, const OrbitSearchOptions& opt) {
  auto inv = invariants(f);
  i128 disc = discriminant(f);
  if (disc == 0) throw std::invalid_argument("quartic_class_counts: zero discriminant");
  Factorization fd = factor(disc);
  if (!fd.complete()) throw std::runtime_error("quartic_class_counts: could not factor the discriminant");
  QuarticClassCounts out;
  out.orbits = orbits_with_invariants(inv.I, inv.J, fd, opt);
  const bool real = disc > 0;
  out.cl2 = out.cl2_plus = out.cl2_strict = out.cl2_plus_strict = 1;
  for (const auto& o : out.orbits.orbits) {
    if (!o.irreducible || !o.nowhere_overramified) continue;
    bool counted_in_cl2 = !real || o.real_roots == 4;
    ++out.cl2_plus;
    if (counted_in_cl2) ++out.cl2;
    if (o.ring_maximal) {
      ++out.cl2_plus_strict;
      if (counted_in_cl2) ++out.cl2_strict;
    }
  }
  return out;
}

int cl2_plus_via_quartics(const MonicCubicForm& f, const OrbitSearchOptions& opt) {
  return quartic_class_counts(f, opt).cl2_plus;
}

int cl2_via_quartics(const MonicCubicForm& f, const OrbitSearchOptions& opt) { return quartic_class_counts(f, opt).cl2; }

TwoClassData cross_validate(const MonicCubicForm& f, const OrbitSearchOptions& qopt, const DirectOptions& dopt) {
  TwoClassData out;
  auto q = quartic_class_counts(f, qopt);
  out.cl2_size = q.cl2;
  out.cl2_plus_size = q.cl2_plus;
  out.convention_split = q.cl2 != q.cl2_strict || q.cl2_plus != q.cl2_plus_strict;
  auto d = direct_class_group(f, dopt);
  out.direct_determinate = d.determinate;
  if (!d.determinate) {
    out.method = ClassMethod::Quartic;
    return out;
  }
  const bool real = discriminant(f) > 0;
  std::optional<int> direct_plus = real ? std::optional<int>(d.narrow_two_part) : std::optional<int>(d.two_part);
  bool agree = d.two_part == q.cl2 && (!direct_plus || *direct_plus == q.cl2_plus);
  if (agree) {
    out.method = ClassMethod::BothAgree;
  } else {
    out.method = ClassMethod::BothDisagree;
    out.discrepancy = Discrepancy{q.cl2, q.cl2_plus, d.two_part, direct_plus,
                                  "h = " + to_string(d.h) + ", orbits = " + std::to_string(q.orbits.orbits.size())};
  }
  return out;
}

}  // namespace moncubic
