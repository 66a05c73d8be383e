#pragma once

#include "milnor/local.hpp"
#include "milnor/numtheory.hpp"
#include "milnor/symbols.hpp"
#include "milnor/tame.hpp"

namespace milnor {

/// The normalized valuation of a local field, with its chosen uniformizer.
template <class T>
struct LocalValuation {
  using Elem = T;
  using Residue = FqElem;

  LocalField<T> field;

  int valuation(const T& x) const {
    if (x.is_zero()) fail(ErrorCode::ZeroEntry, "symbol entries must be nonzero");
    return x.valuation();
  }
  FqElem residue_unit(const T& x) const { return split(x).second.residue(); }
  FqElem minus_one() const { return -field.residue_field().one(); }
  std::pair<int, T> split(const T& x) const {
    if (x.is_zero()) fail(ErrorCode::ZeroEntry, "symbol entries must be nonzero");
    return unit_decompose(x, field);
  }
  T uniformizer() const { return field.pi; }
};

template <class T>
MilnorClass<FqElem> tame(const MilnorClass<T>& a, const LocalField<T>& F) {
  return tame(a, LocalValuation<T>{F});
}

template <class T>
MilnorClass<T> generator_form(const MilnorClass<T>& a, const LocalField<T>& F) {
  return generator_form(a, LocalValuation<T>{F});
}

inline void check_modulus(std::int64_t m, std::int64_t p) {
  if (m < 1) fail(ErrorCode::BadModulus, "modulus must be positive");
  if (gcd_i64(m, p) != 1) fail(ErrorCode::BadModulus, "m = " + std::to_string(m) + " shares a factor with p = " + std::to_string(p));
}

/// Entrywise residue of a class with unit entries; an isomorphism mod m by Hensel lifting.
template <class T>
MilnorClass<FqElem> reduce_mod_m(const MilnorClass<T>& a, std::int64_t m, const LocalField<T>& F) {
  check_modulus(m, F.residue_char());
  MilnorClass<FqElem> out(a.degree());
  for (const auto& [e, c] : a.terms()) {
    std::vector<FqElem> r;
    for (const T& x : e) {
      if (x.is_zero() || x.valuation() != 0) fail(ErrorCode::NonUnitEntry, "entry " + x.str() + " is not a unit");
      r.push_back(x.residue());
    }
    out.add_term(r, c);
  }
  return out;
}

/// Entrywise Teichmuller lift; a section of reduce_mod_m.
template <class T>
MilnorClass<T> lift_mod_m(const MilnorClass<FqElem>& b, std::int64_t m, const LocalField<T>& F) {
  check_modulus(m, F.residue_char());
  MilnorClass<T> out(b.degree());
  for (const auto& [e, c] : b.terms()) {
    std::vector<T> r;
    for (const FqElem& x : e) {
      if (&x.field() != &F.residue_field()) fail(ErrorCode::ContextMismatch, "class is not over the residue field");
      r.push_back(teichmuller_lift(x, F));
    }
    out.add_term(r, c);
  }
  return out;
}

}  // namespace milnor
