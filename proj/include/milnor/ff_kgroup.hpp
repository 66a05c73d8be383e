#pragma once

#include "milnor/finite_field.hpp"
#include "milnor/snf.hpp"
#include "milnor/symbols.hpp"

#include <cstdint>
#include <vector>

namespace milnor {

/// K^M_n(F_q) as a quotient of T_n(F_q^x) = Z/(q-1), generated by {g,...,g}.
struct FfKGroup {
  std::int64_t q = 0;
  int n = 0;
  AbGroupPresentation presentation;
  /// Per relation row: the exponent tuple (i, j, k_3, ...) of the Steinberg
  /// symbol {g^i, g^j, g^k_3, ...} with g^i + g^j = 1; empty for the q-1 row.
  std::vector<std::vector<std::int64_t>> relator_exponents;
  /// Number of distinct relator values enumerated before pruning.
  std::size_t enumerated = 0;

  IntVector invariant_factors() const { return presentation.invariant_factors(); }
  /// Order of the (cyclic) group; 0 means infinite (n = 0).
  BigInt order() const;
  /// Image of a class in Z/order(), via discrete logs of the entries.
  BigInt coordinate(const MilnorClass<FqElem>& c) const;
};

/// Raises FieldTooLarge above the configured q bound and DegreeTooLarge for n > 4.
FfKGroup ff_kgroup(std::int64_t q, int n);

/// Distinct values i*j*k_3*... mod (q-1) over all Steinberg tuples, each
/// with one witness tuple. Shared with the certificate builder.
std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> steinberg_relator_values(const FiniteField& k, int n);

}  // namespace milnor
