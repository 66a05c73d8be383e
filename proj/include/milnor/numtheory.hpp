#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace milnor {

bool is_prime(std::int64_t n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::int64_t, int>> factor_int(std::int64_t n);

/// Returns (p, f) when n = p^f with p prime, else (0, 0).
std::pair<std::int64_t, int> prime_power(std::int64_t n);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

/// a*b mod m without overflow for m < 2^63.
inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m);

/// Floor-mod into [0, m).
inline std::int64_t pmod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t ipow(std::int64_t base, int exp);

/// v_p(n) for n != 0.
int valuation_int(std::int64_t n, std::int64_t p);

/// First `count` primes that differ from `excluded`.
std::vector<std::int64_t> primes_excluding(std::int64_t excluded, int count);

}  // namespace milnor
