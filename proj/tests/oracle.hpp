#pragma once

// Brute-force reference computations used to derive expected values in the
// unit tests. Deliberately independent of the library's algorithms: plain
// integer arithmetic and exhaustive search only.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  for (std::int64_t i = 0; i < e; ++i) r = mulmod(r, b, m);
  return r;
}

/// Multiplicative order of a modulo prime p by repeated multiplication.
inline std::int64_t order_mod(std::int64_t a, std::int64_t p) {
  std::int64_t x = a % p, k = 1;
  while (x != 1) {
    x = x * a % p;
    ++k;
  }
  return k;
}

inline std::int64_t smallest_primitive_root(std::int64_t p) {
  if (p == 2) return 1;
  for (std::int64_t g = 1; g < p; ++g) {
    if (order_mod(g, p) == p - 1) return g;
  }
  return 0;
}

/// Polynomials over F_p as low-to-high integer vectors without trailing zeros.
using IntPoly = std::vector<std::int64_t>;

inline void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

inline IntPoly rem(IntPoly a, const IntPoly& m, std::int64_t p) {
  std::int64_t inv = powmod(m.back(), p - 2, p);
  trim(a);
  while (a.size() >= m.size()) {
    std::int64_t c = a.back() * inv % p;
    std::size_t s = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[s + i] = ((a[s + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

/// Monic polynomial of degree d indexed by its lower coefficients as base-p digits.
inline IntPoly monic_from_index(std::int64_t idx, int d, std::int64_t p) {
  IntPoly r(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    r[static_cast<std::size_t>(i)] = idx % p;
    idx /= p;
  }
  r.back() = 1;
  return r;
}

/// Irreducible iff no monic factor of degree 1..d/2 divides it (trial division).
inline bool irreducible(const IntPoly& f, std::int64_t p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int e = 1; 2 * e <= d; ++e) {
    std::int64_t count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      if (rem(f, monic_from_index(idx, e, p), p).empty()) return false;
    }
  }
  return d >= 1;
}

/// Roots of f in F_p by exhaustion.
inline std::vector<std::int64_t> roots(const IntPoly& f, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

}  // namespace oracle
