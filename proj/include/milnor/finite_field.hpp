#pragma once

#include "milnor/bigint.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace milnor {

class FqElem;

/// F_q with q = p^f. Elements are stored as discrete logarithms to a fixed
/// primitive element; the additive structure goes through "codes", the
/// base-p digit packing of the polynomial representative modulo `modulus()`.
///
/// Construction is canonical: the modulus is the monic irreducible of degree
/// f with the smallest code, the generator is the primitive element with the
/// smallest code. Contexts live in a process-wide registry and are never
/// destroyed, so elements hold a plain pointer.
class FiniteField {
 public:
  static const FiniteField& get(std::int64_t p, int f);
  /// Accepts q = p^f; raises NotPrime when q is not a prime power.
  static const FiniteField& of_order(std::int64_t q);

  std::int64_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return f_; }
  std::int64_t order() const noexcept { return q_; }
  /// Low-to-high coefficients, monic, size degree()+1.
  const std::vector<std::int64_t>& modulus() const noexcept { return modulus_; }
  std::int64_t generator_code() const noexcept { return gen_code_; }
  bool has_tables() const noexcept { return !exp_.empty(); }

  FqElem zero() const;
  FqElem one() const;
  FqElem generator() const;
  FqElem from_int(std::int64_t n) const;
  FqElem from_code(std::int64_t code) const;
  FqElem from_exponent(std::int64_t e) const;
  /// Every element, zero first, then g^0, g^1, ...
  std::vector<FqElem> elements() const;

  std::int64_t code_of_exponent(std::int64_t e) const;
  std::int64_t exponent_of_code(std::int64_t code) const;
  /// log(g^a + g^b), or -1 when the sum vanishes.
  std::int64_t add_exponents(std::int64_t a, std::int64_t b) const;

  std::string name() const;

  // Code-level helpers (also used to build the context).
  std::int64_t code_add(std::int64_t a, std::int64_t b) const;
  std::int64_t code_mul(std::int64_t a, std::int64_t b) const;
  std::int64_t code_pow(std::int64_t a, std::int64_t e) const;

 private:
  FiniteField(std::int64_t p, int f);
  std::int64_t generic_dlog(std::int64_t code) const;

  std::int64_t p_;
  int f_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;
  std::int64_t gen_code_ = 1;
  std::vector<std::int64_t> exp_;   // exponent -> code
  std::vector<std::int64_t> log_;   // code -> exponent
  std::vector<std::int64_t> zech_;  // e -> log(1 + g^e) or -1
};

class FqElem {
 public:
  FqElem() = default;
  FqElem(const FiniteField* field, std::int64_t exponent) : field_(field), exp_(exponent) {}

  const FiniteField& field() const { return *field_; }
  const FiniteField* field_ptr() const noexcept { return field_; }
  bool is_zero() const noexcept { return exp_ < 0; }
  bool is_one() const noexcept { return exp_ == 0; }
  /// Discrete log to the generator; -1 for zero.
  std::int64_t exponent() const noexcept { return exp_; }
  std::int64_t code() const;
  /// Multiplicative order (0 for zero).
  std::int64_t order() const;

  FqElem zero() const { return FqElem(field_, -1); }
  FqElem one() const { return FqElem(field_, 0); }
  FqElem from_int(std::int64_t n) const { return field_->from_int(n); }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const { return *this + (-o); }
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const { return *this * o.inv(); }
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
  FqElem inv() const;
  FqElem pow(const BigInt& e) const;
  FqElem pow(std::int64_t e) const;
  /// Inverse Frobenius; always exists in a finite field.
  FqElem pth_root() const;

  bool operator==(const FqElem& o) const noexcept { return field_ == o.field_ && exp_ == o.exp_; }
  std::strong_ordering operator<=>(const FqElem& o) const noexcept { return exp_ <=> o.exp_; }

  std::string str() const;
  /// Short form without the context prefix: "g^e", "0" (or the integer for prime fields).
  std::string short_str() const;

 private:
  const FiniteField* field_ = nullptr;
  std::int64_t exp_ = -1;
};

}  // namespace milnor
