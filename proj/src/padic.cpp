#include "milnor/padic.hpp"

#include "milnor/error.hpp"
#include "milnor/numtheory.hpp"

#include <algorithm>

namespace milnor {

namespace {

std::int64_t pp(std::int64_t p, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace

int PadicNumber::max_precision(std::int64_t p) {
  int k = 0;
  __int128 v = 1;
  while (v * p < (static_cast<__int128>(1) << 62)) {
    v *= p;
    ++k;
  }
  return k;
}

PadicNumber PadicNumber::from_int(std::int64_t p, const BigInt& n, int prec) {
  if (n == 0) return exact_zero(p, prec);
  BigInt m = n;
  int v = 0;
  BigInt bp = big(p);
  while (m % bp == 0) {
    m /= bp;
    ++v;
  }
  if (prec < 1 || prec > max_precision(p)) fail(ErrorCode::PrecisionExhausted, "p-adic precision out of range");
  return from_parts(p, v, mod_i64(m, pp(p, prec)), prec);
}

PadicNumber PadicNumber::from_parts(std::int64_t p, int valuation, std::int64_t unit, int prec) {
  if (prec < 1 || prec > max_precision(p)) fail(ErrorCode::PrecisionExhausted, "p-adic precision out of range");
  PadicNumber x;
  x.p_ = p;
  x.zero_ = false;
  x.abs_ = 0;
  x.val_ = valuation;
  x.prec_ = prec;
  x.unit_ = pmod(unit, pp(p, prec));
  if (x.unit_ % p == 0) fail(ErrorCode::NotAUnit, "p-adic mantissa must be coprime to p");
  return x;
}

PadicNumber PadicNumber::exact_zero(std::int64_t p, int hint) {
  PadicNumber x;
  x.p_ = p;
  x.prec_ = hint;
  return x;
}

PadicNumber PadicNumber::zero_mod(std::int64_t p, int absprec, int hint) {
  PadicNumber x;
  x.p_ = p;
  x.abs_ = absprec;
  x.prec_ = hint;
  return x;
}

void PadicNumber::check_same(const PadicNumber& o) const {
  if (p_ != o.p_) fail(ErrorCode::ContextMismatch, "p-adic numbers over different primes");
}

PadicNumber PadicNumber::unit_part() const {
  if (zero_) fail(ErrorCode::ZeroElement, "unit part of zero");
  PadicNumber u = *this;
  u.val_ = 0;
  return u;
}

FqElem PadicNumber::residue() const {
  const FiniteField& k = residue_field();
  if (zero_) {
    if (abs_ < 1) fail(ErrorCode::PrecisionTooLowToReduce, "residue of O(p^" + std::to_string(abs_) + ")");
    return k.zero();
  }
  if (val_ < 0) fail(ErrorCode::NotAUnit, "residue of a non-integral p-adic number");
  if (val_ > 0) return k.zero();
  return k.from_int(unit_ % p_);
}

PadicNumber PadicNumber::shift(int k) const {
  PadicNumber x = *this;
  if (zero_) {
    if (abs_ != kInfinite) x.abs_ += k;
  } else {
    x.val_ += k;
  }
  return x;
}

PadicNumber PadicNumber::with_precision(int prec) const {
  if (zero_) {
    PadicNumber z = *this;
    z.prec_ = prec;
    return z;
  }
  if (prec < 1 || prec > max_precision(p_)) fail(ErrorCode::PrecisionExhausted, "p-adic precision out of range");
  PadicNumber x = *this;
  x.prec_ = prec;
  if (prec < prec_) x.unit_ = unit_ % pp(p_, prec);
  return x;
}

PadicNumber PadicNumber::truncate_absolute(int absprec) const {
  if (absprec >= absolute_precision()) return *this;
  if (zero_ || val_ >= absprec) return zero_mod(p_, absprec, prec_);
  return with_precision(absprec - val_);
}

bool PadicNumber::congruent(const PadicNumber& o, int absprec) const {
  PadicNumber d = *this - o;
  if (d.is_zero()) return d.abs_ >= absprec;
  return d.val_ >= absprec;
}

BigInt PadicNumber::lift() const {
  if (zero_) return 0;
  if (val_ < 0) fail(ErrorCode::NotAUnit, "integer lift of a non-integral p-adic number");
  BigInt r = big(unit_);
  for (int i = 0; i < val_; ++i) r *= p_;
  return r;
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
  check_same(o);
  if (is_exact_zero()) return o;
  if (o.is_exact_zero()) return *this;
  const int absp = std::min(absolute_precision(), o.absolute_precision());
  const int hint = std::max(prec_, o.prec_);
  if (zero_ || o.zero_) {
    const PadicNumber& nz = zero_ ? o : *this;
    if (nz.zero_) return zero_mod(p_, absp, hint);
    return nz.truncate_absolute(absp);
  }
  const int m = std::min(val_, o.val_);
  const int width = absp - m;
  const std::int64_t mod = pp(p_, width);
  auto term = [&](const PadicNumber& x) -> std::int64_t {
    int s = x.val_ - m;
    if (s >= width) return 0;
    return mul_mod(x.unit_ % mod, pp(p_, s), mod);
  };
  std::int64_t s = (term(*this) + term(o)) % mod;
  if (s == 0) return zero_mod(p_, absp, hint);
  int k = 0;
  while (s % p_ == 0) {
    s /= p_;
    ++k;
  }
  return from_parts(p_, m + k, s, absp - m - k);
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  PadicNumber x = *this;
  x.unit_ = pp(p_, prec_) - unit_;
  return x;
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
  check_same(o);
  const int hint = std::max(prec_, o.prec_);
  if (is_exact_zero() || o.is_exact_zero()) return exact_zero(p_, hint);
  if (zero_ && o.zero_) return zero_mod(p_, abs_ + o.abs_, hint);
  if (zero_) return zero_mod(p_, abs_ + o.val_, hint);
  if (o.zero_) return zero_mod(p_, o.abs_ + val_, hint);
  const int prec = std::min(prec_, o.prec_);
  const std::int64_t mod = pp(p_, prec);
  return from_parts(p_, val_ + o.val_, mul_mod(unit_ % mod, o.unit_ % mod, mod), prec);
}

PadicNumber PadicNumber::inv() const {
  if (zero_) fail(ErrorCode::DivisionByZero, "inverse of p-adic zero");
  return from_parts(p_, -val_, inv_mod(unit_, pp(p_, prec_)), prec_);
}

PadicNumber PadicNumber::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  PadicNumber base = *this, r = one();
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

std::strong_ordering PadicNumber::operator<=>(const PadicNumber& o) const noexcept {
  if (auto c = p_ <=> o.p_; c != 0) return c;
  if (zero_ != o.zero_) return zero_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (zero_) return abs_ <=> o.abs_;
  if (auto c = val_ <=> o.val_; c != 0) return c;
  if (auto c = prec_ <=> o.prec_; c != 0) return c;
  return unit_ <=> o.unit_;
}

std::string PadicNumber::short_str() const {
  if (is_exact_zero()) return "0";
  if (zero_) return "O(" + std::to_string(p_) + "^" + std::to_string(abs_) + ")";
  return std::to_string(unit_) + "*" + std::to_string(p_) + "^" + std::to_string(val_);
}

std::string PadicNumber::str() const {
  return "padic(" + std::to_string(p_) + "," + std::to_string(default_precision()) + "):" + short_str();
}

}  // namespace milnor
