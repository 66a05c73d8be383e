#pragma once

#include "milnor/finite_field.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace milnor {

/// Truncated Laurent series over F_q: t^v * (c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N))
/// with c_0 != 0. Zero is a separate marker, exact or "O(t^a)".
class LaurentSeries {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  LaurentSeries() = default;

  static LaurentSeries from_coeffs(const FiniteField& k, int valuation, std::vector<FqElem> coeffs);
  static LaurentSeries constant(const FqElem& c, int prec);
  static LaurentSeries exact_zero(const FiniteField& k, int hint = 1);
  static LaurentSeries zero_mod(const FiniteField& k, int absprec, int hint = 1);

  const FiniteField& residue_field() const { return *k_; }
  std::int64_t prime() const { return k_->characteristic(); }

  bool is_zero() const noexcept { return zero_; }
  bool is_exact_zero() const noexcept { return zero_ && abs_ == kInfinite; }
  int valuation() const noexcept { return zero_ ? abs_ : val_; }
  int precision() const noexcept { return zero_ ? 0 : static_cast<int>(c_.size()); }
  int working_precision() const noexcept { return zero_ ? hint_ : static_cast<int>(c_.size()); }
  int absolute_precision() const noexcept { return zero_ ? abs_ : val_ + precision(); }
  /// Coefficients of the unit part, c_0 first.
  const std::vector<FqElem>& coeffs() const noexcept { return c_; }
  /// Coefficient of t^i (zero outside the known window below the truncation).
  FqElem coeff(int i) const;
  bool is_unit() const noexcept { return !zero_ && val_ == 0; }
  bool in_principal_units() const noexcept { return is_unit() && c_[0].is_one(); }

  LaurentSeries unit_part() const;
  FqElem residue() const;
  LaurentSeries shift(int k) const;
  LaurentSeries with_precision(int prec) const;
  LaurentSeries truncate_absolute(int absprec) const;
  bool congruent(const LaurentSeries& o, int absprec) const;

  LaurentSeries zero() const { return exact_zero(*k_, working_precision()); }
  LaurentSeries one() const { return constant(k_->one(), working_precision()); }
  LaurentSeries from_int(std::int64_t n) const;
  LaurentSeries uniformizer() const { return constant(k_->one(), working_precision()).shift(1); }

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inv(); }
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
  LaurentSeries inv() const;
  LaurentSeries pow(std::int64_t e) const;

  bool operator==(const LaurentSeries& o) const noexcept;
  std::strong_ordering operator<=>(const LaurentSeries& o) const noexcept;

  /// "laurent(q,N):t^k*(c0,c1,...)", "laurent(q,N):0" or "laurent(q,N):O(t^a)".
  std::string str() const;
  std::string short_str() const;

 private:
  void check_same(const LaurentSeries& o) const;

  const FiniteField* k_ = nullptr;
  bool zero_ = true;
  int abs_ = kInfinite;
  int val_ = 0;
  int hint_ = 1;
  std::vector<FqElem> c_;
};

}  // namespace milnor
