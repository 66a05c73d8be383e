#pragma once

#include "milnor/bigint.hpp"
#include "milnor/finite_field.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace milnor {

/// Element of Q_p known to finite precision: u * p^v with u a unit known
/// modulo p^prec (prec = relative precision). Zero is a separate marker,
/// either exact or "O(p^a)" when only its absolute precision is known.
class PadicNumber {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  PadicNumber() = default;

  /// Largest relative precision with p^prec < 2^62.
  static int max_precision(std::int64_t p);
  static PadicNumber from_int(std::int64_t p, const BigInt& n, int prec);
  static PadicNumber from_int(std::int64_t p, std::int64_t n, int prec) { return from_int(p, big(n), prec); }
  static PadicNumber from_parts(std::int64_t p, int valuation, std::int64_t unit, int prec);
  /// `hint` is the precision used by one()/from_int() on the marker.
  static PadicNumber exact_zero(std::int64_t p, int hint = 1);
  static PadicNumber zero_mod(std::int64_t p, int absprec, int hint = 1);

  std::int64_t prime() const noexcept { return p_; }
  const FiniteField& residue_field() const { return FiniteField::get(p_, 1); }

  bool is_zero() const noexcept { return zero_; }
  bool is_exact_zero() const noexcept { return zero_ && abs_ == kInfinite; }
  /// v(x); for a zero marker this is its absolute precision.
  int valuation() const noexcept { return zero_ ? abs_ : val_; }
  int precision() const noexcept { return zero_ ? 0 : prec_; }
  int working_precision() const noexcept { return prec_; }
  int absolute_precision() const noexcept { return zero_ ? abs_ : val_ + prec_; }
  std::int64_t unit() const noexcept { return unit_; }
  bool is_unit() const noexcept { return !zero_ && val_ == 0; }
  bool in_principal_units() const noexcept { return is_unit() && unit_ % p_ == 1; }

  PadicNumber unit_part() const;
  /// Residue class in F_p; requires valuation >= 0.
  FqElem residue() const;
  /// Multiplies by p^k.
  PadicNumber shift(int k) const;
  /// Relative precision set to `prec`: truncates, or pads the representative with zero digits.
  PadicNumber with_precision(int prec) const;
  PadicNumber truncate_absolute(int absprec) const;
  /// True when the difference has valuation >= absprec.
  bool congruent(const PadicNumber& o, int absprec) const;
  /// Integer u * p^v; requires v >= 0.
  BigInt lift() const;

  PadicNumber zero() const { return exact_zero(p_, default_precision()); }
  PadicNumber one() const { return from_parts(p_, 0, 1, default_precision()); }
  PadicNumber from_int(std::int64_t n) const { return from_int(p_, n, default_precision()); }
  PadicNumber uniformizer() const { return from_parts(p_, 1, 1, default_precision()); }

  PadicNumber operator+(const PadicNumber& o) const;
  PadicNumber operator-() const;
  PadicNumber operator-(const PadicNumber& o) const { return *this + (-o); }
  PadicNumber operator*(const PadicNumber& o) const;
  PadicNumber operator/(const PadicNumber& o) const { return *this * o.inv(); }
  PadicNumber& operator+=(const PadicNumber& o) { return *this = *this + o; }
  PadicNumber& operator-=(const PadicNumber& o) { return *this = *this - o; }
  PadicNumber& operator*=(const PadicNumber& o) { return *this = *this * o; }
  PadicNumber inv() const;
  PadicNumber pow(std::int64_t e) const;

  bool operator==(const PadicNumber& o) const noexcept {
    if (p_ != o.p_ || zero_ != o.zero_) return false;
    if (zero_) return abs_ == o.abs_;
    return val_ == o.val_ && prec_ == o.prec_ && unit_ == o.unit_;
  }
  std::strong_ordering operator<=>(const PadicNumber& o) const noexcept;

  /// "padic(p,N):u*p^k", "padic(p,N):0" or "padic(p,N):O(p^a)".
  std::string str() const;
  /// The part after the colon.
  std::string short_str() const;

 private:
  /// Relative precision of nonzero values; the hint for zero markers.
  int default_precision() const noexcept { return prec_; }
  void check_same(const PadicNumber& o) const;

  std::int64_t p_ = 2;
  bool zero_ = true;
  int abs_ = kInfinite;  // zero markers only
  int val_ = 0;
  int prec_ = 1;
  std::int64_t unit_ = 0;
};

}  // namespace milnor
