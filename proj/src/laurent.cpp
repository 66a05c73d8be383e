#include "milnor/laurent.hpp"

#include "milnor/error.hpp"

#include <algorithm>

namespace milnor {

LaurentSeries LaurentSeries::from_coeffs(const FiniteField& k, int valuation, std::vector<FqElem> coeffs) {
  if (coeffs.empty()) fail(ErrorCode::PrecisionExhausted, "Laurent series needs at least one coefficient");
  const int prec = static_cast<int>(coeffs.size());
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
  if (lead == coeffs.size()) return zero_mod(k, valuation + prec, prec);
  LaurentSeries x;
  x.k_ = &k;
  x.zero_ = false;
  x.abs_ = 0;
  x.val_ = valuation + static_cast<int>(lead);
  x.hint_ = prec;
  x.c_.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(lead), coeffs.end());
  return x;
}

LaurentSeries LaurentSeries::constant(const FqElem& c, int prec) {
  const FiniteField& k = c.field();
  if (c.is_zero()) return exact_zero(k, prec);
  std::vector<FqElem> cs(static_cast<std::size_t>(prec), k.zero());
  cs[0] = c;
  return from_coeffs(k, 0, std::move(cs));
}

LaurentSeries LaurentSeries::exact_zero(const FiniteField& k, int hint) {
  LaurentSeries x;
  x.k_ = &k;
  x.hint_ = hint;
  return x;
}

LaurentSeries LaurentSeries::zero_mod(const FiniteField& k, int absprec, int hint) {
  LaurentSeries x = exact_zero(k, hint);
  x.abs_ = absprec;
  return x;
}

void LaurentSeries::check_same(const LaurentSeries& o) const {
  if (k_ != o.k_) fail(ErrorCode::ContextMismatch, "Laurent series over different residue fields");
}

FqElem LaurentSeries::coeff(int i) const {
  if (zero_) return k_->zero();
  int j = i - val_;
  if (j < 0 || j >= precision()) return k_->zero();
  return c_[static_cast<std::size_t>(j)];
}

LaurentSeries LaurentSeries::from_int(std::int64_t n) const { return constant(k_->from_int(n), working_precision()); }

LaurentSeries LaurentSeries::unit_part() const {
  if (zero_) fail(ErrorCode::ZeroElement, "unit part of zero");
  LaurentSeries u = *this;
  u.val_ = 0;
  return u;
}

FqElem LaurentSeries::residue() const {
  if (zero_) {
    if (abs_ < 1) fail(ErrorCode::PrecisionTooLowToReduce, "residue of O(t^" + std::to_string(abs_) + ")");
    return k_->zero();
  }
  if (val_ < 0) fail(ErrorCode::NotAUnit, "residue of a series with a pole");
  if (val_ > 0) return k_->zero();
  return c_[0];
}

LaurentSeries LaurentSeries::shift(int k) const {
  LaurentSeries x = *this;
  if (zero_) {
    if (abs_ != kInfinite) x.abs_ += k;
  } else {
    x.val_ += k;
  }
  return x;
}

LaurentSeries LaurentSeries::with_precision(int prec) const {
  if (zero_) {
    LaurentSeries z = *this;
    z.hint_ = prec;
    return z;
  }
  if (prec < 1) fail(ErrorCode::PrecisionExhausted, "Laurent precision must be positive");
  LaurentSeries x = *this;
  x.c_.resize(static_cast<std::size_t>(prec), k_->zero());
  x.hint_ = prec;
  return x;
}

LaurentSeries LaurentSeries::truncate_absolute(int absprec) const {
  if (absprec >= absolute_precision()) return *this;
  if (zero_ || val_ >= absprec) return zero_mod(*k_, absprec, working_precision());
  return with_precision(absprec - val_);
}

bool LaurentSeries::congruent(const LaurentSeries& o, int absprec) const {
  LaurentSeries d = *this - o;
  return d.valuation() >= absprec;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  check_same(o);
  if (is_exact_zero()) return o;
  if (o.is_exact_zero()) return *this;
  const int absp = std::min(absolute_precision(), o.absolute_precision());
  const int hint = std::max(working_precision(), o.working_precision());
  if (zero_ || o.zero_) {
    const LaurentSeries& nz = zero_ ? o : *this;
    if (nz.zero_) return zero_mod(*k_, absp, hint);
    return nz.truncate_absolute(absp);
  }
  const int m = std::min(val_, o.val_);
  const int width = absp - m;
  std::vector<FqElem> s(static_cast<std::size_t>(width), k_->zero());
  auto add = [&](const LaurentSeries& x) {
    const int off = x.val_ - m;
    for (int i = 0; i < x.precision() && off + i < width; ++i) {
      s[static_cast<std::size_t>(off + i)] += x.c_[static_cast<std::size_t>(i)];
    }
  };
  add(*this);
  add(o);
  LaurentSeries r = from_coeffs(*k_, m, std::move(s));
  if (r.zero_) r.hint_ = hint;
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  if (zero_) return *this;
  LaurentSeries x = *this;
  for (auto& c : x.c_) c = -c;
  return x;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  check_same(o);
  const int hint = std::max(working_precision(), o.working_precision());
  if (is_exact_zero() || o.is_exact_zero()) return exact_zero(*k_, hint);
  if (zero_ && o.zero_) return zero_mod(*k_, abs_ + o.abs_, hint);
  if (zero_) return zero_mod(*k_, abs_ + o.val_, hint);
  if (o.zero_) return zero_mod(*k_, o.abs_ + val_, hint);
  const std::size_t n = std::min(c_.size(), o.c_.size());
  std::vector<FqElem> r(n, k_->zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return from_coeffs(*k_, val_ + o.val_, std::move(r));
}

LaurentSeries LaurentSeries::inv() const {
  if (zero_) fail(ErrorCode::DivisionByZero, "inverse of Laurent zero");
  const std::size_t n = c_.size();
  std::vector<FqElem> b(n, k_->zero());
  const FqElem a0inv = c_[0].inv();
  b[0] = a0inv;
  for (std::size_t k = 1; k < n; ++k) {
    FqElem acc = k_->zero();
    for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * b[k - i];
    b[k] = -(acc * a0inv);
  }
  return from_coeffs(*k_, -val_, std::move(b));
}

LaurentSeries LaurentSeries::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  LaurentSeries base = *this, r = one();
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const noexcept {
  if (k_ != o.k_ || zero_ != o.zero_) return false;
  if (zero_) return abs_ == o.abs_;
  return val_ == o.val_ && c_ == o.c_;
}

std::strong_ordering LaurentSeries::operator<=>(const LaurentSeries& o) const noexcept {
  if (zero_ != o.zero_) return zero_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (zero_) return abs_ <=> o.abs_;
  if (auto c = val_ <=> o.val_; c != 0) return c;
  if (auto c = c_.size() <=> o.c_.size(); c != 0) return c;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string LaurentSeries::short_str() const {
  if (is_exact_zero()) return "0";
  if (zero_) return "O(t^" + std::to_string(abs_) + ")";
  std::string s = "t^" + std::to_string(val_) + "*(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].short_str();
  }
  return s + ")";
}

std::string LaurentSeries::str() const {
  return "laurent(" + std::to_string(k_->order()) + "," + std::to_string(working_precision()) + "):" + short_str();
}

}  // namespace milnor
