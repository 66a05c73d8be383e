#pragma once

#include "milnor/finite_field.hpp"
#include "milnor/padic.hpp"
#include "milnor/sqrt_kernel.hpp"

#include <array>
#include <optional>

namespace milnor {

/// The class of {a, b} in (K_2 Q_p)/p as computed here.
///   p = 2: value is the Hilbert symbol written additively (1 means -1).
///   p odd: value is the discrete log of the tame pairing residue, and
///          killed_by_p records that this residue is a p-th power.
struct HilbertValue {
  std::int64_t p = 2;
  std::int64_t value = 0;
  std::optional<FqElem> tame_residue;
  bool killed_by_p = true;
};

HilbertValue hilbert(const PadicNumber& a, const PadicNumber& b);

/// Solution (x, y, z) of z^2 = a x^2 + b y^2 with the search witness.
struct QfResult {
  bool solvable = false;
  std::array<std::int64_t, 3> approx{};   // primitive solution mod p^k (normalized coefficients)
  std::array<PadicNumber, 3> lifted;      // Hensel-lifted solution
  int verified_precision = 0;
  std::uint64_t candidates = 0;           // (x, y) pairs scanned
};

/// Decides nontrivial solvability of z^2 = a x^2 + b y^2 over Q_p by
/// exhausting normalized primitive triples mod p^k. Solvable answers are
/// Hensel-lifted and re-verified; a search that finds only non-liftable
/// solutions fails with PrecisionTooLow.
QfResult qf_oracle(const PadicNumber& a, const PadicNumber& b, int k, KernelImpl impl);
QfResult qf_oracle(const PadicNumber& a, const PadicNumber& b, int k);

/// Smallest search precision at which the liftability test can succeed.
int default_search_precision(std::int64_t p);

}  // namespace milnor
