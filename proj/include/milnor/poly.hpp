#pragma once

#include "milnor/bigint.hpp"
#include "milnor/error.hpp"

#include <algorithm>
#include <compare>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace milnor {

/// Dense univariate polynomial over a field whose elements carry their own
/// context (FqElem, RatFunc, Ext, ...). Coefficients are stored low to high
/// with no trailing zeros; `base_` is a zero of the coefficient field so the
/// zero polynomial still knows where it lives.
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(const K& base) : base_(base.zero()) {}
  Poly(const K& base, std::vector<K> coeffs) : base_(base.zero()), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const K& c) { return Poly(c, {c}); }
  static Poly monomial(const K& c, int deg) {
    std::vector<K> v(static_cast<std::size_t>(deg) + 1, c.zero());
    v.back() = c;
    return Poly(c, std::move(v));
  }
  static Poly x(const K& base) { return monomial(base.one(), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const noexcept { return c_; }
  const K& base() const noexcept { return base_; }
  K coeff(int i) const {
    if (i < 0 || i > degree()) return base_;
    return c_[static_cast<std::size_t>(i)];
  }
  K leading() const { return is_zero() ? base_ : c_.back(); }
  bool is_monic() const { return !is_zero() && c_.back() == base_.one(); }

  Poly zero() const { return Poly(base_); }
  Poly one() const { return constant(base_.one()); }

  Poly monic() const {
    if (is_zero()) return *this;
    K inv = c_.back().inv();
    return *this * inv;
  }

  Poly operator+(const Poly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), base_);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(base_, std::move(r));
  }
  Poly operator-() const {
    std::vector<K> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(-a);
    return Poly(base_, std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<K> r(c_.size() + o.c_.size() - 1, base_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(base_, std::move(r));
  }
  Poly operator*(const K& s) const {
    std::vector<K> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(a * s);
    return Poly(base_, std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Euclidean division; the divisor's leading coefficient must be invertible.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (degree() < d.degree()) return {zero(), *this};
    std::vector<K> rem = c_;
    std::vector<K> quo(c_.size() - d.c_.size() + 1, base_);
    const K lead_inv = d.c_.back().inv();
    for (int i = degree(); i >= d.degree(); --i) {
      const K c = rem[static_cast<std::size_t>(i)] * lead_inv;
      const auto shift = static_cast<std::size_t>(i - d.degree());
      quo[shift] = c;
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] = rem[shift + j] - c * d.c_[j];
    }
    rem.resize(static_cast<std::size_t>(d.degree()), base_);
    return {Poly(base_, std::move(quo)), Poly(base_, std::move(rem))};
  }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }

  /// Quotient when d divides exactly, otherwise throws.
  Poly exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) fail(ErrorCode::InvalidArgument, "inexact polynomial division");
    return q;
  }

  bool divisible_by(const Poly& d) const { return (*this % d).is_zero(); }

  K eval(const K& x) const {
    K acc = base_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Evaluates at an element of an algebra over K; `embed` maps coefficients.
  template <class R, class Embed>
  R eval_in(const R& x, Embed embed) const {
    R acc = x.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(c_[i]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<K> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * base_.from_int(static_cast<std::int64_t>(i)));
    return Poly(base_, std::move(r));
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  /// Degree first, then coefficients from the top down.
  std::strong_ordering operator<=>(const Poly& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      std::string coef = coeff_str(c_[i]);
      if (!out.empty()) out += " + ";
      if (i == 0) {
        out += coef;
      } else {
        if (c_[i] != base_.one()) out += coef + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  static std::string coeff_str(const K& c) {
    if constexpr (requires { c.short_str(); }) {
      return c.short_str();
    } else {
      return "(" + c.str() + ")";
    }
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  K base_{};
  std::vector<K> c_;
};

/// Monic gcd (zero when both inputs are zero).
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> xgcd(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0 = a.one(), s1 = a.zero();
  Poly<K> t0 = a.zero(), t1 = a.one();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<K> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = r0.leading().inv();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// a^e mod m for e >= 0.
template <class K>
Poly<K> powmod(Poly<K> a, BigInt e, const Poly<K>& m) {
  Poly<K> r = a.one() % m;
  a = a % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = (r * a) % m;
    a = (a * a) % m;
    e >>= 1;
  }
  return r;
}

/// Inverse of a modulo m; throws DivisionByZero if they share a factor.
template <class K>
Poly<K> invmod(const Poly<K>& a, const Poly<K>& m) {
  auto [g, s, t] = xgcd(a % m, m);
  (void)t;
  if (g.degree() != 0) fail(ErrorCode::DivisionByZero, "polynomial is not invertible modulo the given modulus");
  return s % m;
}

/// Resultant Res(a, b) via the Euclidean recurrence.
template <class K>
K resultant(Poly<K> a, Poly<K> b) {
  const K one = a.base().one();
  if (a.is_zero() || b.is_zero()) return a.base();
  K acc = one;
  while (true) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) {
      K r = acc;
      for (int i = 0; i < da; ++i) r = r * b.leading();
      return r;
    }
    if (da < db) {
      if ((da * db) % 2 == 1) acc = -acc;
      std::swap(a, b);
      continue;
    }
    Poly<K> r = a % b;
    if (r.is_zero()) return a.base();
    // Res(a,b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
    if ((da * db) % 2 == 1) acc = -acc;
    for (int i = 0; i < da - r.degree(); ++i) acc = acc * b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

template <class T>
T power(T base, BigInt e, const T& one) {
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  T r = one;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace milnor
