#include "moncubic/number_field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "moncubic/numeric.hpp"

namespace moncubic {

using cld = std::complex<long double>;

CubicField::CubicField(const MonicCubicForm& f) : f_(f) {
  disc_ = discriminant(f);
  if (disc_ == 0) throw std::invalid_argument("CubicField: zero discriminant");
  if (!is_irreducible_cubic(f)) throw std::invalid_argument("CubicField: reducible polynomial");
  auto roots = polynomial_roots(
      {1.0L, static_cast<long double>(f.a), static_cast<long double>(f.b), static_cast<long double>(f.c)});
  if (disc_ > 0) {
    r1_ = 3;
    r2_ = 0;
    for (auto& r : roots) emb_.push_back({r.real(), 0});
    std::sort(emb_.begin(), emb_.end(), [](const cld& x, const cld& y) { return x.real() < y.real(); });
  } else {
    r1_ = 1;
    r2_ = 1;
    std::sort(roots.begin(), roots.end(), [](const cld& x, const cld& y) { return std::fabs(x.imag()) < std::fabs(y.imag()); });
    emb_.push_back({roots[0].real(), 0});
    emb_.push_back({roots[1].real(), std::fabs(roots[1].imag())});
  }
  reduce_basis();
}

Element CubicField::mul(const Element& x, const Element& y) const {
  // Product as a polynomial of degree <= 4 in theta, then reduce.
  i128 p[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i + j] = checked_add(p[i + j], checked_mul(x[i], y[j]));
  for (int k = 4; k >= 3; --k) {
    // theta^k = theta^(k-3) * (-a theta^2 - b theta - c)
    i128 t = p[k];
    p[k] = 0;
    p[k - 1] = checked_sub(p[k - 1], checked_mul(t, f_.a));
    p[k - 2] = checked_sub(p[k - 2], checked_mul(t, f_.b));
    p[k - 3] = checked_sub(p[k - 3], checked_mul(t, f_.c));
  }
  return {p[0], p[1], p[2]};
}

i128 CubicField::norm(const Element& x) const {
  Element c0 = x;
  Element c1 = mul(x, {0, 1, 0});
  Element c2 = mul(c1, {0, 1, 0});
  auto m = [&](int r, int c) { return c == 0 ? c0[r] : c == 1 ? c1[r] : c2[r]; };
  i128 det = checked_mul(m(0, 0), checked_sub(checked_mul(m(1, 1), m(2, 2)), checked_mul(m(1, 2), m(2, 1))));
  det = checked_sub(det, checked_mul(m(0, 1), checked_sub(checked_mul(m(1, 0), m(2, 2)), checked_mul(m(1, 2), m(2, 0)))));
  det = checked_add(det, checked_mul(m(0, 2), checked_sub(checked_mul(m(1, 0), m(2, 1)), checked_mul(m(1, 1), m(2, 0)))));
  return det;
}

cld CubicField::evaluate(const Element& x, cld t) const {
  return static_cast<long double>(x[0]) + t * (static_cast<long double>(x[1]) + t * static_cast<long double>(x[2]));
}

std::vector<long double> CubicField::log_embedding(const Element& x) const {
  std::vector<long double> out;
  for (int i = 0; i < r1_; ++i) out.push_back(std::log(std::fabs(evaluate(x, emb_[i]).real())));
  for (int i = 0; i < r2_; ++i) out.push_back(2 * std::log(std::abs(evaluate(x, emb_[r1_ + i]))));
  return out;
}

unsigned CubicField::sign_vector(const Element& x) const {
  unsigned s = 0;
  for (int i = 0; i < r1_; ++i)
    if (evaluate(x, emb_[i]).real() < 0) s |= 1u << i;
  return s;
}

void CubicField::reduce_basis() {
  // Minkowski coordinates of an element.
  auto coords = [&](const Element& x) {
    std::array<long double, 3> v{};
    if (r1_ == 3) {
      for (int i = 0; i < 3; ++i) v[i] = evaluate(x, emb_[i]).real();
    } else {
      v[0] = evaluate(x, emb_[0]).real();
      cld z = evaluate(x, emb_[1]);
      v[1] = std::sqrt(2.0L) * z.real();
      v[2] = std::sqrt(2.0L) * z.imag();
    }
    return v;
  };
  std::array<Element, 3> b{Element{1, 0, 0}, Element{0, 1, 0}, Element{0, 0, 1}};
  auto dot = [](const std::array<long double, 3>& u, const std::array<long double, 3>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  };
  auto sub_mult = [](Element& x, const Element& y, i128 m) {
    for (int i = 0; i < 3; ++i) x[i] = checked_sub(x[i], checked_mul(m, y[i]));
  };

  // Textbook LLL with delta = 0.99; recomputes Gram-Schmidt each pass.
  int k = 1;
  for (int guard = 0; k < 3 && guard < 10000; ++guard) {
    std::array<std::array<long double, 3>, 3> v, bs;
    std::array<std::array<long double, 3>, 3> mu{};
    std::array<long double, 3> B{};
    for (int i = 0; i < 3; ++i) v[i] = coords(b[i]);
    for (int i = 0; i < 3; ++i) {
      bs[i] = v[i];
      for (int j = 0; j < i; ++j) {
        mu[i][j] = dot(v[i], bs[j]) / B[j];
        for (int t = 0; t < 3; ++t) bs[i][t] -= mu[i][j] * bs[j][t];
      }
      B[i] = dot(bs[i], bs[i]);
    }
    bool changed = false;
    for (int j = k - 1; j >= 0; --j) {
      long double r = std::nearbyint(mu[k][j]);
      if (r != 0) {
        sub_mult(b[k], b[j], static_cast<i128>(r));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    if (B[k] < (0.99L - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      std::swap(b[k], b[k - 1]);
      k = std::max(k - 1, 1);
    } else {
      ++k;
    }
  }
  basis_ = b;
}

std::vector<PrimeIdeal> CubicField::primes_above(std::uint64_t p) const {
  EtaleType t = etale_type(f_, p);
  auto roots = roots_with_multiplicity(FpPoly::from_integers({f_.c, f_.b, f_.a, 1}, p));
  std::vector<PrimeIdeal> out;
  auto deg1 = [&](std::uint64_t r, int e) { out.push_back({p, e, 1, r, true}); };
  switch (t) {
    case EtaleType::Split:
      for (const auto& [r, m] : roots) deg1(r, 1);
      break;
    case EtaleType::UnramQuad:
      deg1(roots.at(0).first, 1);
      out.push_back({p, 1, 2, 0, false});
      break;
    case EtaleType::UnramCubic:
      out.push_back({p, 1, 3, 0, false});
      break;
    case EtaleType::RamQuad:
      // Double root first, then the simple one.
      for (const auto& [r, m] : roots)
        if (m == 2) deg1(r, 2);
      for (const auto& [r, m] : roots)
        if (m == 1) deg1(r, 1);
      break;
    case EtaleType::RamCubic:
      deg1(roots.at(0).first, 3);
      break;
  }
  return out;
}

long double CubicField::minkowski_bound() const {
  long double m = (2.0L / 9.0L) * std::sqrt(std::fabs(static_cast<long double>(disc_)));
  if (r2_ == 1) m *= 4.0L / M_PIl;
  return m;
}

namespace {

// Splitting type at an odd prime p > 3 not dividing disc: the discriminant
// character decides between one root and {0, 3}; x^p mod f settles the rest.
EtaleType unramified_type(const MonicCubicForm& f, i128 disc, std::uint64_t p) {
  std::uint64_t d = reduce_mod(disc, p);
  if (powmod(d, (p - 1) / 2, p) != 1) return EtaleType::UnramQuad;
  const std::uint64_t a = reduce_mod(f.a, p), b = reduce_mod(f.b, p), c = reduce_mod(f.c, p);
  using R = std::array<std::uint64_t, 3>;  // r0 + r1 x + r2 x^2 mod f
  auto mul = [&](const R& u, const R& v) {
    std::uint64_t t[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t[i + j] = (t[i + j] + mulmod(u[i], v[j], p)) % p;
    // x^3 = -a x^2 - b x - c
    for (int k = 4; k >= 3; --k) {
      std::uint64_t h = t[k];
      if (h == 0) continue;
      t[k] = 0;
      t[k - 1] = (t[k - 1] + p - mulmod(h, a, p)) % p;
      t[k - 2] = (t[k - 2] + p - mulmod(h, b, p)) % p;
      t[k - 3] = (t[k - 3] + p - mulmod(h, c, p)) % p;
    }
    return R{t[0], t[1], t[2]};
  };
  R result{1, 0, 0}, base{0, 1, 0};
  for (std::uint64_t e = p; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result == R{0, 1, 0} ? EtaleType::Split : EtaleType::UnramCubic;
}

}  // namespace

long double CubicField::analytic_hr(std::uint64_t prime_bound) const {
  long double log_l = 0;
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    long double q = 1.0L / static_cast<long double>(p);
    EtaleType t;
    if (disc_ % static_cast<i128>(p) == 0) {
      t = etale_type(f_, p);
    } else if (p > 3) {
      t = unramified_type(f_, disc_, p);
    } else {
      int n = distinct_root_count(FpPoly::from_integers({f_.c, f_.b, f_.a, 1}, p));
      t = n == 3 ? EtaleType::Split : n == 1 ? EtaleType::UnramQuad : EtaleType::UnramCubic;
    }
    switch (t) {
      case EtaleType::Split: log_l += -2 * std::log1p(-q); break;
      case EtaleType::UnramQuad: log_l += -std::log1p(-q * q); break;
      case EtaleType::UnramCubic: log_l += std::log1p(-q) - std::log1p(-q * q * q); break;
      case EtaleType::RamQuad: log_l += -std::log1p(-q); break;
      case EtaleType::RamCubic: break;
    }
  }
  const long double w = 2;
  long double hr = std::exp(log_l) * w * std::sqrt(std::fabs(static_cast<long double>(disc_)));
  hr /= std::pow(2.0L, r1_) * std::pow(2 * M_PIl, r2_);
  return hr;
}

}  // namespace moncubic
