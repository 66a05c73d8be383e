#pragma once

#include "milnor/extension.hpp"
#include "milnor/finite_field.hpp"
#include "milnor/laurent.hpp"
#include "milnor/padic.hpp"
#include "milnor/ratfunc.hpp"

#include <algorithm>

namespace milnor {

// Context identity: symbols may only combine entries from one field.
inline bool same_context(const FqElem& a, const FqElem& b) { return a.field_ptr() == b.field_ptr(); }
inline bool same_context(const PadicNumber& a, const PadicNumber& b) { return a.prime() == b.prime(); }
inline bool same_context(const LaurentSeries& a, const LaurentSeries& b) {
  return &a.residue_field() == &b.residue_field();
}
template <class K>
bool same_context(const RatFunc<K>& a, const RatFunc<K>& b) {
  return same_context(a.base(), b.base());
}
template <class K>
bool same_context(const Ext<K>& a, const Ext<K>& b) {
  return a.field() == b.field() || (a.field() && b.field() && a.modulus() == b.modulus());
}

template <class E>
concept Approximate = requires(const E& a, const E& b) { a.congruent(b, 0); };

/// Equality for exact types, congruence at the common absolute precision for local ones.
template <class E>
bool matches(const E& a, const E& b) {
  if constexpr (Approximate<E>) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.congruent(b, std::min(a.absolute_precision(), b.absolute_precision()));
  } else {
    return a == b;
  }
}

template <class E>
E minus_one(const E& like) {
  return -like.one();
}

}  // namespace milnor
