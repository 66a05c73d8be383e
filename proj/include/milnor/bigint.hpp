#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace milnor {

using BigInt = mpz_class;

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

inline std::int64_t to_i64(const BigInt& v) { return static_cast<std::int64_t>(v.get_si()); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Non-negative residue of v modulo m (m > 0).
inline std::int64_t mod_i64(const BigInt& v, std::int64_t m) {
  BigInt r = v % big(m);
  if (r < 0) r += m;
  return to_i64(r);
}

}  // namespace milnor
