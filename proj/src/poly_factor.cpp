#include "milnor/poly_factor.hpp"

#include "milnor/numtheory.hpp"

#include <algorithm>
#include <random>

namespace milnor {

namespace {

BigInt big_pow(std::int64_t base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<long>(base);
  return r;
}

FqPoly pth_root_poly(const FqPoly& f, std::int64_t p) {
  std::vector<FqElem> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i).pth_root());
  return FqPoly(f.base(), std::move(c));
}

void squarefree(const FqPoly& f, int mult, std::vector<std::pair<FqPoly, int>>& out) {
  const std::int64_t p = f.base().field().characteristic();
  FqPoly c = gcd(f, f.derivative());
  FqPoly w = f.exact_div(c);
  int i = 1;
  while (w.degree() > 0) {
    FqPoly y = gcd(w, c);
    FqPoly fac = w.exact_div(y);
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c.exact_div(y);
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root_poly(c.monic(), p), mult * static_cast<int>(p), out);
}

std::vector<std::pair<FqPoly, int>> distinct_degree(FqPoly f) {
  const BigInt q = static_cast<long>(f.base().field().order());
  std::vector<std::pair<FqPoly, int>> out;
  const FqPoly x = FqPoly::x(f.base());
  FqPoly h = x % f;
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = powmod(h, q, f);
    FqPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f.exact_div(g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

void equal_degree(const FqPoly& f, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const FiniteField& F = f.base().field();
  const std::int64_t p = F.characteristic();
  const BigInt qd = big_pow(F.order(), d);
  while (true) {
    std::vector<FqElem> coeffs;
    for (int i = 0; i < f.degree(); ++i) coeffs.push_back(F.from_code(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(F.order()))));
    FqPoly a(f.base(), coeffs);
    if (a.degree() < 1) continue;
    FqPoly b;
    if (p != 2) {
      b = powmod(a, (qd - 1) / 2, f) - f.one();
    } else {
      // Absolute trace to F_2: sum of a^(2^j), j < f*d.
      const int k = F.degree() * d;
      FqPoly t = a % f, acc = a % f;
      for (int j = 1; j < k; ++j) {
        t = (t * t) % f;
        acc = acc + t;
      }
      b = acc;
    }
    FqPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f.exact_div(g), d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization poly_factor(const FqPoly& f, std::uint64_t seed) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  Factorization res;
  res.leading = f.leading();
  res.seed = seed;
  if (f.degree() == 0) return res;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<FqPoly, int>> sqf;
  squarefree(f.monic(), 1, sqf);
  for (const auto& [g, m] : sqf) {
    for (const auto& [h, d] : distinct_degree(g)) {
      std::vector<FqPoly> parts;
      equal_degree(h, d, rng, parts);
      for (auto& part : parts) res.factors.emplace_back(std::move(part), m);
    }
  }
  std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  // Merge repeated irreducibles coming from different square-free layers.
  std::vector<std::pair<FqPoly, int>> merged;
  for (auto& fm : res.factors) {
    if (!merged.empty() && merged.back().first == fm.first) {
      merged.back().second += fm.second;
    } else {
      merged.push_back(std::move(fm));
    }
  }
  res.factors = std::move(merged);
  return res;
}

bool is_irreducible(const FqPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const BigInt q = static_cast<long>(f.base().field().order());
  const FqPoly g = f.monic();
  const FqPoly x = FqPoly::x(f.base());
  const int n = g.degree();
  auto frob = [&](int k) {
    FqPoly h = x % g;
    for (int i = 0; i < k; ++i) h = powmod(h, q, g);
    return h;
  };
  if (frob(n) != x % g) return false;
  for (auto [r, e] : factor_int(n)) {
    (void)e;
    FqPoly h = frob(n / static_cast<int>(r)) - x;
    if (gcd(g, h).degree() > 0) return false;
  }
  return true;
}

std::vector<FqPoly> monic_irreducibles(const FiniteField& field, int d) {
  std::vector<FqPoly> out;
  const std::int64_t q = field.order();
  const std::int64_t count = ipow(q, d);
  for (std::int64_t code = 0; code < count; ++code) {
    std::vector<FqElem> c;
    std::int64_t rest = code;
    for (int i = 0; i < d; ++i) {
      c.push_back(field.from_code(rest % q));
      rest /= q;
    }
    c.push_back(field.one());
    FqPoly f(field.one(), std::move(c));
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FqPoly random_poly(const FiniteField& field, int degree, std::mt19937_64& rng, bool monic) {
  std::vector<FqElem> c;
  for (int i = 0; i <= degree; ++i) c.push_back(field.from_code(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(field.order()))));
  if (monic) c.back() = field.one();
  return FqPoly(field.one(), std::move(c));
}

}  // namespace milnor
