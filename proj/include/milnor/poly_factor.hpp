#pragma once

#include "milnor/finite_field.hpp"
#include "milnor/poly.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace milnor {

using FqPoly = Poly<FqElem>;

struct Factorization {
  FqElem leading;                              // f = leading * prod(factor^mult)
  std::vector<std::pair<FqPoly, int>> factors; // monic irreducible, sorted
  std::uint64_t seed = 0;                      // seed of the equal-degree splitter
};

/// Default seed for the randomized equal-degree split.
inline constexpr std::uint64_t kFactorSeed = 0x5eed'f00d'2024ULL;

/// Square-free, distinct-degree and Cantor-Zassenhaus equal-degree
/// factorization over F_q. Raises ZeroPolynomial on f = 0.
Factorization poly_factor(const FqPoly& f, std::uint64_t seed = kFactorSeed);

/// Irreducibility over F_q via Rabin's criterion.
bool is_irreducible(const FqPoly& f);

/// Monic irreducible polynomials of degree d over `field`, ascending order.
std::vector<FqPoly> monic_irreducibles(const FiniteField& field, int d);

/// Uniform coefficients of degree <= `degree`; forced monic of exact degree when `monic`.
FqPoly random_poly(const FiniteField& field, int degree, std::mt19937_64& rng, bool monic);

}  // namespace milnor
