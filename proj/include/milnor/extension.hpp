#pragma once

#include "milnor/poly.hpp"

#include <compare>
#include <memory>
#include <string>

namespace milnor {

template <class K>
struct ExtensionField {
  Poly<K> modulus;   // monic; a field when irreducible
  std::string var = "x";
};

/// Element of K[X]/(modulus), stored as the reduced representative.
template <class K>
class Ext {
 public:
  using Field = ExtensionField<K>;

  Ext() = default;
  Ext(std::shared_ptr<const Field> F, Poly<K> v) : F_(std::move(F)), v_(std::move(v)) { v_ = v_ % F_->modulus; }

  static std::shared_ptr<const Field> make_field(Poly<K> modulus, std::string var = "x") {
    if (!modulus.is_monic()) fail(ErrorCode::NotMonic, "extension modulus must be monic");
    return std::make_shared<const Field>(Field{std::move(modulus), std::move(var)});
  }
  static Ext generator(std::shared_ptr<const Field> F) {
    Poly<K> x = Poly<K>::x(F->modulus.base());
    return Ext(std::move(F), std::move(x));
  }
  static Ext embed(std::shared_ptr<const Field> F, const K& c) { return Ext(std::move(F), Poly<K>::constant(c)); }

  const Poly<K>& value() const noexcept { return v_; }
  const std::shared_ptr<const Field>& field() const noexcept { return F_; }
  const Poly<K>& modulus() const { return F_->modulus; }

  bool is_zero() const noexcept { return v_.is_zero(); }
  Ext zero() const { return Ext(F_, v_.zero(), Raw{}); }
  Ext one() const { return Ext(F_, v_.one() % F_->modulus, Raw{}); }
  Ext from_int(std::int64_t n) const { return Ext(F_, Poly<K>::constant(v_.base().from_int(n))); }

  Ext operator+(const Ext& o) const { return Ext(F_, v_ + o.v_, Raw{}); }
  Ext operator-() const { return Ext(F_, -v_, Raw{}); }
  Ext operator-(const Ext& o) const { return Ext(F_, v_ - o.v_, Raw{}); }
  Ext operator*(const Ext& o) const { return Ext(F_, (v_ * o.v_) % F_->modulus, Raw{}); }
  Ext operator/(const Ext& o) const { return *this * o.inv(); }
  Ext& operator+=(const Ext& o) { return *this = *this + o; }
  Ext& operator*=(const Ext& o) { return *this = *this * o; }
  Ext inv() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in extension");
    return Ext(F_, invmod(v_, F_->modulus), Raw{});
  }

  bool operator==(const Ext& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Ext& o) const { return v_ <=> o.v_; }

  std::string str() const { return "[" + v_.str(F_ ? F_->var : "x") + "]"; }

 private:
  struct Raw {};
  Ext(std::shared_ptr<const Field> F, Poly<K> v, Raw) : F_(std::move(F)), v_(std::move(v)) {}

  std::shared_ptr<const Field> F_;
  Poly<K> v_;
};

}  // namespace milnor
