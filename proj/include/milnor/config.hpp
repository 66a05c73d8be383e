#pragma once

#include <cstdint>
#include <string>

namespace milnor {

/// Search and size bounds shared by every module. The CLI may override them
/// from MILNOR_FORGE_BOUNDS ("maxq=...,maxdeg=...,oracleprec=...").
struct Bounds {
  std::int64_t max_field = std::int64_t{1} << 20;   // largest p^f for FiniteField
  std::int64_t max_kgroup_q = std::int64_t{1} << 10;
  int max_kgroup_degree = 4;
  int max_norm_degree = 4;
  int max_correction_degree = 64;                   // Bass-Tate termination counter
  int oracle_precision = 8;                         // qf_oracle searches mod p^k
  std::int64_t table_limit = std::int64_t{1} << 16; // dlog tables built up to this size
};

Bounds& bounds();

/// Parses "key=value,..." pairs onto `b`; unknown keys raise InvalidArgument.
void apply_bounds_spec(Bounds& b, const std::string& spec);

}  // namespace milnor
