#pragma once

#include "milnor/poly.hpp"

#include <compare>
#include <optional>
#include <string>

namespace milnor {

/// Element of K(t): reduced fraction with monic denominator.
template <class K>
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly<K> num) : num_(std::move(num)), den_(num_.one()) {}
  RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  static RatFunc constant(const K& c) { return RatFunc(Poly<K>::constant(c)); }

  const Poly<K>& num() const noexcept { return num_; }
  const Poly<K>& den() const noexcept { return den_; }
  const K& base() const noexcept { return num_.base(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  RatFunc zero() const { return RatFunc(num_.zero()); }
  RatFunc one() const { return RatFunc(num_.one()); }
  RatFunc from_int(std::int64_t n) const { return constant(base().from_int(n)); }

  RatFunc operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return zero();
    // Cross-cancel before multiplying to keep degrees small.
    Poly<K> g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    return RatFunc(num_.exact_div(g1) * o.num_.exact_div(g2), den_.exact_div(g2) * o.den_.exact_div(g1));
  }
  RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inv() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const RatFunc& o) const {
    if (auto c = num_ <=> o.num_; c != 0) return c;
    return den_ <=> o.den_;
  }

  std::string str(const std::string& var = "t") const {
    if (den_.degree() == 0) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  struct Reduced {};
  RatFunc(Poly<K> num, Poly<K> den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void reduce() {
    if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = num_.one();
      return;
    }
    if (den_.degree() > 0) {
      Poly<K> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
    K lc = den_.leading();
    if (!(lc == lc.one())) {
      K inv = lc.inv();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly<K> num_;
  Poly<K> den_;
};

}  // namespace milnor
