#pragma once

#include "milnor/bass_tate.hpp"
#include "milnor/gersten.hpp"
#include "milnor/poly_factor.hpp"

#include <random>
#include <vector>

namespace forge {

inline milnor::FqRat random_rat(std::mt19937_64& rng, const milnor::FiniteField& k, int max_deg) {
  milnor::FqPoly n;
  do {
    n = milnor::random_poly(k, static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1)), rng, false);
  } while (n.is_zero());
  const milnor::FqPoly d = milnor::random_poly(k, static_cast<int>(rng() % 2), rng, true);
  return milnor::FqRat(n, d);
}

/// A sum of up to `terms` degree-2 symbols with random rational entries.
inline milnor::FqRatClass random_rat_class(std::mt19937_64& rng, const milnor::FiniteField& k, int terms, int max_deg) {
  milnor::FqRatClass a(2);
  for (int i = 0; i < terms; ++i)
    a += milnor::FqRatClass::symbol({random_rat(rng, k, max_deg), random_rat(rng, k, max_deg)})
             .scaled(1 + static_cast<long>(rng() % 2));
  return a;
}

template <class T>
milnor::MilnorClass<T> random_unit_symbol(const milnor::LocalField<T>& F, int n, std::mt19937_64& rng) {
  std::vector<T> e;
  for (int i = 0; i < n; ++i) e.push_back(milnor::detail::random_local_unit(F, rng));
  return milnor::MilnorClass<T>::symbol(e);
}

/// A nonzero element u * pi^v with v in [-2, 2].
template <class T>
T random_local_element(const milnor::LocalField<T>& F, std::mt19937_64& rng) {
  T x = milnor::detail::random_local_unit(F, rng);
  const int v = static_cast<int>(rng() % 5) - 2;
  for (int j = 0; j < std::abs(v); ++j) x = v > 0 ? x * F.pi : x / F.pi;
  return x;
}

/// Product of the entries of a degree-1 class over F_q, with multiplicities.
inline milnor::FqElem collapse_units(const milnor::MilnorClass<milnor::FqElem>& c, const milnor::FiniteField& k) {
  milnor::FqElem r = k.one();
  for (const auto& [e, m] : c.terms()) {
    const std::int64_t qm1 = k.order() - 1;
    milnor::BigInt em = m % qm1;
    if (em < 0) em += qm1;
    r = r * k.from_exponent(milnor::BigInt(em * e[0].exponent() % qm1).get_si());
  }
  return r;
}

inline std::vector<std::int64_t> prime_powers_upto(std::int64_t maxq) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 2; q <= maxq; ++q) {
    std::int64_t p = 2;
    while (q % p) ++p;
    std::int64_t r = q;
    while (r % p == 0) r /= p;
    if (r == 1) out.push_back(q);
  }
  return out;
}

inline std::vector<std::int64_t> primes_other_than(std::int64_t p, std::size_t count) {
  std::vector<std::int64_t> out;
  for (std::int64_t l = 2; out.size() < count; ++l)
    if (milnor::is_prime(l) && l != p) out.push_back(l);
  return out;
}

}  // namespace forge
