#pragma once

#include "milnor/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace milnor {

using IntMatrix = std::vector<std::vector<BigInt>>;
using IntVector = std::vector<BigInt>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix zero_matrix(std::size_t rows, std::size_t cols);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
/// Row vector times matrix.
IntVector vec_mul(const IntVector& v, const IntMatrix& m);
/// Fraction-free Gaussian elimination (Bareiss).
BigInt determinant(IntMatrix m);

/// U * A * V = D with D diagonal, d_1 | d_2 | ..., and U, V unimodular.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rows = 0;
  std::size_t cols = 0;

  /// Diagonal entries d_1 ... d_min(rows, cols), all non-negative.
  IntVector diagonal() const;
};

/// Computes and verifies the Smith form; a failed verification throws.
SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);
inline SmithForm smith_normal_form(const IntMatrix& a) { return smith_normal_form(a, a.empty() ? 0 : a.front().size()); }
/// Exact check of U*A*V = D, divisibility chain, and |det U| = |det V| = 1.
bool verify_smith(const IntMatrix& a, const SmithForm& s);

/// Quotient Z^n / (row span of the relation matrix).
struct AbGroupPresentation {
  std::size_t num_generators = 0;
  IntMatrix relations;
  SmithForm snf;

  static AbGroupPresentation make(std::size_t num_generators, IntMatrix relations);
  /// Invariant factors of the quotient with the trivial ones (1) removed; free parts appear as 0.
  IntVector invariant_factors() const;
};

/// Coefficients c with c * relations = v, or nullopt when v is outside the row span.
std::optional<IntVector> express_in_relators(const AbGroupPresentation& p, const IntVector& v);

std::string vector_str(const IntVector& v);

}  // namespace milnor
