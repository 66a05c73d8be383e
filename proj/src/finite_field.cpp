#include "milnor/finite_field.hpp"

#include "milnor/config.hpp"
#include "milnor/error.hpp"
#include "milnor/numtheory.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace milnor {

namespace {

std::vector<std::int64_t> code_digits(std::int64_t code, std::int64_t p, int f) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(f), 0);
  for (int i = 0; i < f; ++i) {
    d[static_cast<std::size_t>(i)] = code % p;
    code /= p;
  }
  return d;
}

std::int64_t digits_code(const std::vector<std::int64_t>& d, std::int64_t p) {
  std::int64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

// Polynomial helpers over F_p on low-to-high coefficient vectors.
using IntPoly = std::vector<std::int64_t>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly poly_mod(IntPoly a, const IntPoly& m, std::int64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::int64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm && !a.empty()) {
    std::int64_t c = mul_mod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = pmod(a[shift + i] - mul_mod(c, m[i], p), p);
    }
    trim(a);
  }
  return a;
}

IntPoly poly_mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(r, m, p);
}

IntPoly poly_gcd(IntPoly a, IntPoly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    IntPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: m of degree f is irreducible over F_p iff X^(p^f) = X mod m
// and gcd(X^(p^(f/r)) - X, m) = 1 for each prime r | f.
bool int_poly_irreducible(const IntPoly& m, std::int64_t p) {
  const int f = static_cast<int>(m.size()) - 1;
  if (f == 1) return true;
  auto frob_power = [&](int k) {
    IntPoly x{0, 1};
    IntPoly r = poly_mod(x, m, p);
    for (int i = 0; i < k; ++i) {
      // r <- r^p mod m
      IntPoly acc{1};
      IntPoly base = r;
      std::int64_t e = p;
      while (e > 0) {
        if (e & 1) acc = poly_mulmod(acc, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
      }
      r = acc;
    }
    return r;
  };
  IntPoly full = frob_power(f);
  IntPoly xm = poly_mod(IntPoly{0, 1}, m, p);
  trim(full);
  if (full != xm) return false;
  for (auto [r, e] : factor_int(f)) {
    (void)e;
    IntPoly h = frob_power(f / static_cast<int>(r));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = pmod(h[1] - 1, p);
    trim(h);
    IntPoly g = poly_gcd(m, h, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

const FiniteField& FiniteField::get(std::int64_t p, int f) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (f < 1) fail(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  const double approx = static_cast<double>(f) * std::log2(static_cast<double>(p));
  if (approx > 62.0 || ipow(p, f) > bounds().max_field) {
    fail(ErrorCode::FieldTooLarge, "p^f exceeds the configured bound " + std::to_string(bounds().max_field));
  }
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, std::unique_ptr<FiniteField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, f}];
  if (!slot) slot.reset(new FiniteField(p, f));
  return *slot;
}

const FiniteField& FiniteField::of_order(std::int64_t q) {
  auto [p, f] = prime_power(q);
  if (p == 0) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  return get(p, f);
}

FiniteField::FiniteField(std::int64_t p, int f) : p_(p), f_(f), q_(ipow(p, f)) {
  // Smallest-code monic irreducible of degree f.
  for (std::int64_t low = 0; low < q_; ++low) {
    IntPoly m = code_digits(low, p_, f_);
    m.push_back(1);
    if (f_ == 1 || (m[0] != 0 && int_poly_irreducible(m, p_))) {
      modulus_ = m;
      break;
    }
  }
  // Smallest-code primitive element.
  const std::int64_t n = q_ - 1;
  auto prime_divs = factor_int(n);
  for (std::int64_t c = 1; c < q_; ++c) {
    bool primitive = true;
    for (auto [r, e] : prime_divs) {
      (void)e;
      if (code_pow(c, n / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen_code_ = c;
      break;
    }
  }
  if (q_ <= bounds().table_limit) {
    exp_.assign(static_cast<std::size_t>(n), 0);
    log_.assign(static_cast<std::size_t>(q_), -1);
    std::int64_t cur = 1;
    for (std::int64_t e = 0; e < n; ++e) {
      exp_[static_cast<std::size_t>(e)] = cur;
      log_[static_cast<std::size_t>(cur)] = e;
      cur = code_mul(cur, gen_code_);
    }
    zech_.assign(static_cast<std::size_t>(n), -1);
    for (std::int64_t e = 0; e < n; ++e) {
      std::int64_t s = code_add(1, exp_[static_cast<std::size_t>(e)]);
      zech_[static_cast<std::size_t>(e)] = s == 0 ? -1 : log_[static_cast<std::size_t>(s)];
    }
  }
}

std::int64_t FiniteField::code_add(std::int64_t a, std::int64_t b) const {
  if (f_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  std::int64_t out = 0, scale = 1;
  for (int i = 0; i < f_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::int64_t FiniteField::code_mul(std::int64_t a, std::int64_t b) const {
  if (f_ == 1) return mul_mod(a, b, p_);
  IntPoly pa = code_digits(a, p_, f_), pb = code_digits(b, p_, f_);
  trim(pa);
  trim(pb);
  IntPoly r = poly_mulmod(pa, pb, modulus_, p_);
  r.resize(static_cast<std::size_t>(f_), 0);
  return digits_code(r, p_);
}

std::int64_t FiniteField::code_pow(std::int64_t a, std::int64_t e) const {
  std::int64_t r = 1;
  while (e > 0) {
    if (e & 1) r = code_mul(r, a);
    a = code_mul(a, a);
    e >>= 1;
  }
  return r;
}

std::int64_t FiniteField::code_of_exponent(std::int64_t e) const {
  if (e < 0) return 0;
  if (has_tables()) return exp_[static_cast<std::size_t>(e)];
  return code_pow(gen_code_, e);
}

std::int64_t FiniteField::exponent_of_code(std::int64_t code) const {
  if (code == 0) return -1;
  if (has_tables()) return log_[static_cast<std::size_t>(code)];
  return generic_dlog(code);
}

// Pohlig-Hellman over the prime-power parts of q-1, baby-step giant-step in each.
std::int64_t FiniteField::generic_dlog(std::int64_t code) const {
  const std::int64_t n = q_ - 1;
  std::int64_t x = 0, mod = 1;
  for (auto [r, e] : factor_int(n)) {
    const std::int64_t re = ipow(r, e);
    const std::int64_t cofactor = n / re;
    const std::int64_t g = code_pow(gen_code_, cofactor);
    const std::int64_t h = code_pow(code, cofactor);
    const auto m = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(re))));
    std::unordered_map<std::int64_t, std::int64_t> baby;
    std::int64_t cur = 1;
    for (std::int64_t j = 0; j < m; ++j) {
      baby.emplace(cur, j);
      cur = code_mul(cur, g);
    }
    const std::int64_t giant = code_pow(g, pmod(-m, re));
    std::int64_t gamma = h, k = -1;
    for (std::int64_t i = 0; i <= m; ++i) {
      auto it = baby.find(gamma);
      if (it != baby.end()) {
        k = pmod(i * m + it->second, re);
        break;
      }
      gamma = code_mul(gamma, giant);
    }
    if (k < 0) fail(ErrorCode::InvalidArgument, "discrete log failed");
    // CRT combine x mod `mod` with k mod re.
    std::int64_t t = mul_mod(pmod(k - x, re), inv_mod(mod % re, re), re);
    x += mod * t;
    mod *= re;
  }
  return pmod(x, n);
}

std::int64_t FiniteField::add_exponents(std::int64_t a, std::int64_t b) const {
  const std::int64_t n = q_ - 1;
  if (has_tables()) {
    std::int64_t z = zech_[static_cast<std::size_t>(pmod(b - a, n))];
    return z < 0 ? -1 : (a + z) % n;
  }
  std::int64_t s = code_add(code_of_exponent(a), code_of_exponent(b));
  return exponent_of_code(s);
}

FqElem FiniteField::zero() const { return FqElem(this, -1); }
FqElem FiniteField::one() const { return FqElem(this, 0); }
FqElem FiniteField::generator() const { return FqElem(this, q_ == 2 ? 0 : 1 % (q_ - 1)); }
FqElem FiniteField::from_code(std::int64_t code) const {
  if (code < 0 || code >= q_) fail(ErrorCode::InvalidArgument, "code out of range");
  return FqElem(this, exponent_of_code(code));
}
FqElem FiniteField::from_int(std::int64_t n) const { return from_code(pmod(n, p_)); }
FqElem FiniteField::from_exponent(std::int64_t e) const { return FqElem(this, pmod(e, q_ - 1)); }

std::vector<FqElem> FiniteField::elements() const {
  std::vector<FqElem> out;
  out.reserve(static_cast<std::size_t>(q_));
  out.push_back(zero());
  for (std::int64_t e = 0; e < q_ - 1; ++e) out.emplace_back(this, e);
  return out;
}

std::string FiniteField::name() const { return "ff(" + std::to_string(p_) + "," + std::to_string(f_) + ")"; }

std::int64_t FqElem::code() const { return field_->code_of_exponent(exp_); }

std::int64_t FqElem::order() const {
  if (is_zero()) return 0;
  const std::int64_t n = field_->order() - 1;
  return n / gcd_i64(n, exp_);
}

FqElem FqElem::operator+(const FqElem& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  return FqElem(field_, field_->add_exponents(exp_, o.exp_));
}

FqElem FqElem::operator-() const {
  if (is_zero() || field_->characteristic() == 2) return *this;
  const std::int64_t n = field_->order() - 1;
  return FqElem(field_, (exp_ + n / 2) % n);
}

FqElem FqElem::operator*(const FqElem& o) const {
  if (is_zero() || o.is_zero()) return zero();
  return FqElem(field_, (exp_ + o.exp_) % (field_->order() - 1));
}

FqElem FqElem::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in " + field_->name());
  const std::int64_t n = field_->order() - 1;
  return FqElem(field_, (n - exp_) % n);
}

FqElem FqElem::pow(std::int64_t e) const {
  if (is_zero()) {
    if (e == 0) return one();
    if (e < 0) fail(ErrorCode::DivisionByZero, "negative power of zero");
    return *this;
  }
  const std::int64_t n = field_->order() - 1;
  return FqElem(field_, static_cast<std::int64_t>((static_cast<__int128>(exp_) * pmod(e, n)) % n));
}

FqElem FqElem::pow(const BigInt& e) const {
  if (is_zero()) return pow(e == 0 ? std::int64_t{0} : (e < 0 ? std::int64_t{-1} : std::int64_t{1}));
  return pow(mod_i64(e, field_->order() - 1));
}

FqElem FqElem::pth_root() const {
  if (is_zero()) return *this;
  return pow(field_->order() / field_->characteristic());
}

std::string FqElem::short_str() const {
  if (is_zero()) return "0";
  if (field_->degree() == 1) return std::to_string(code());
  return "g^" + std::to_string(exp_);
}

std::string FqElem::str() const {
  return field_->name() + ":" + (is_zero() ? std::string("0") : "g^" + std::to_string(exp_));
}

}  // namespace milnor
