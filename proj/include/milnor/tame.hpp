#pragma once

#include "milnor/symbols.hpp"

#include <cstdint>
#include <vector>

namespace milnor {

/// A discrete valuation on the entry type E with residue field elements R.
/// Models provide:
///   int valuation(const E&) const;
///   R residue_unit(const E& x) const;   // residue of x / pi^v(x)
///   R minus_one() const;                // -1 in the residue field
template <class V>
concept DiscreteValuation = requires(const V& v, const typename V::Elem& x) {
  { v.valuation(x) } -> std::convertible_to<int>;
  { v.residue_unit(x) } -> std::convertible_to<typename V::Residue>;
  { v.minus_one() } -> std::convertible_to<typename V::Residue>;
};

namespace detail {

/// Sign of moving the entries at `chosen` (ascending) to the front.
inline int front_sign(const std::vector<std::size_t>& chosen) {
  std::size_t moves = 0;
  for (std::size_t i = 0; i < chosen.size(); ++i) moves += chosen[i] - i;
  return moves % 2 == 0 ? 1 : -1;
}

/// {pi x m, rest} = sign * {pi, (-1) x (m-1), rest}.
inline int collapse_sign(std::size_t m) {
  if (m < 2) return 1;
  return ((m - 1) * (m - 2) / 2) % 2 == 0 ? 1 : -1;
}

template <class E>
bool has_unit_entry(const std::vector<E>& e) {
  for (const E& x : e)
    if (matches(x, x.one())) return true;
  return false;
}

}  // namespace detail

/// Tame symbol d_pi: K_n F -> K_{n-1} kappa. Each entry x_i = pi^{k_i} u_i is
/// expanded multilinearly; a term with pi at the positions S contributes
/// prod k_i times the residue of its generator form {pi, -1, ..., -1, u_rest}.
template <DiscreteValuation V>
MilnorClass<typename V::Residue> tame(const MilnorClass<typename V::Elem>& a, const V& val) {
  using R = typename V::Residue;
  if (a.degree() < 1) fail(ErrorCode::InvalidArgument, "tame symbol needs degree >= 1");
  const std::size_t n = static_cast<std::size_t>(a.degree());
  MilnorClass<R> out(a.degree() - 1);
  const R m1 = val.minus_one();
  for (const auto& [entries, coeff] : a.terms()) {
    std::vector<int> k(n);
    std::vector<R> u;
    u.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      k[i] = val.valuation(entries[i]);
      u.push_back(val.residue_unit(entries[i]));
    }
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> chosen;
      BigInt c = coeff;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          chosen.push_back(i);
          c *= k[i];
        }
      }
      if (c == 0) continue;
      c *= detail::front_sign(chosen) * detail::collapse_sign(chosen.size());
      std::vector<R> e(chosen.size() - 1, m1);
      for (std::size_t i = 0; i < n; ++i)
        if (!(mask & (1u << i))) e.push_back(u[i]);
      // {..., 1, ...} = 0 by multilinearity.
      if (detail::has_unit_entry(e)) continue;
      out.add_term(e, c);
    }
  }
  return out;
}

/// Generator form over a valuation that can also split x = pi^k u inside E:
///   std::pair<int, E> split(const E&) const;  E uniformizer() const;
/// Every output term is {pi, u_2, ...} or {u_1, ...} with unit u_i.
template <class V>
MilnorClass<typename V::Elem> generator_form(const MilnorClass<typename V::Elem>& a, const V& val) {
  using E = typename V::Elem;
  const std::size_t n = static_cast<std::size_t>(a.degree());
  MilnorClass<E> out(a.degree());
  if (n == 0) return a;
  const E pi = val.uniformizer();
  const E m1 = minus_one(pi);
  for (const auto& [entries, coeff] : a.terms()) {
    std::vector<int> k(n);
    std::vector<E> u;
    for (std::size_t i = 0; i < n; ++i) {
      auto [ki, ui] = val.split(entries[i]);
      k[i] = ki;
      u.push_back(ui);
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> chosen;
      BigInt c = coeff;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          chosen.push_back(i);
          c *= k[i];
        }
      }
      if (c == 0) continue;
      std::vector<E> e;
      if (!chosen.empty()) {
        c *= detail::front_sign(chosen) * detail::collapse_sign(chosen.size());
        e.push_back(pi);
        e.insert(e.end(), chosen.size() - 1, m1);
      }
      for (std::size_t i = 0; i < n; ++i)
        if (!(mask & (1u << i))) e.push_back(u[i]);
      if (detail::has_unit_entry(e)) continue;
      out.add_term(e, c);
    }
  }
  return out;
}

}  // namespace milnor
