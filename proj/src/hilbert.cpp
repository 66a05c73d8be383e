#include "milnor/hilbert.hpp"

#include "milnor/local.hpp"
#include "milnor/localk.hpp"
#include "milnor/numtheory.hpp"

namespace milnor {

namespace {

std::int64_t small_lift(const PadicNumber& u, std::int64_t m) {
  BigInt r = u.lift() % m;
  if (r < 0) r += m;
  return r.get_si();
}

int vp(std::int64_t x, std::int64_t p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (x % p == 0 && v < cap) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace

HilbertValue hilbert(const PadicNumber& a, const PadicNumber& b) {
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroInput, "hilbert symbol of zero");
  if (a.prime() != b.prime()) fail(ErrorCode::ContextMismatch, "arguments over different primes");
  const std::int64_t p = a.prime();
  HilbertValue h;
  h.p = p;
  if (p == 2) {
    if (a.precision() < 3 || b.precision() < 3) fail(ErrorCode::PrecisionTooLow, "need units modulo 8");
    const std::int64_t u = small_lift(a.unit_part(), 8), v = small_lift(b.unit_part(), 8);
    const std::int64_t alpha = a.valuation(), beta = b.valuation();
    auto eps = [](std::int64_t x) { return ((x - 1) / 2) % 2; };
    auto omega = [](std::int64_t x) { return ((x * x - 1) / 8) % 2; };
    h.value = (eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)) % 2;
    return h;
  }
  const int prec = std::max(1, std::min(a.precision(), b.precision()));
  auto F = padic_field(p, prec);
  auto t = tame(MilnorClass<PadicNumber>::symbol({a, b}), F);
  const FiniteField& k = F.residue_field();
  FqElem c = k.one();
  for (const auto& [e, coeff] : t.terms()) c = c * e[0].pow(coeff.get_si());
  h.tame_residue = c;
  h.value = c.exponent();
  // p is prime to p - 1, so c = r^p with r = c^(p^-1 mod p-1).
  const std::int64_t inv = p - 1 == 1 ? 0 : inv_mod(p % (p - 1), p - 1);
  h.killed_by_p = c.pow(inv).pow(p) == c;
  return h;
}

int default_search_precision(std::int64_t p) { return p == 2 ? 6 : 3; }

QfResult qf_oracle(const PadicNumber& a, const PadicNumber& b, int k) { return qf_oracle(a, b, k, default_kernel()); }

QfResult qf_oracle(const PadicNumber& a, const PadicNumber& b, int k, KernelImpl impl) {
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroInput, "quadratic form with a zero coefficient");
  if (a.prime() != b.prime()) fail(ErrorCode::ContextMismatch, "arguments over different primes");
  const std::int64_t p = a.prime();
  if (k < 1) fail(ErrorCode::InvalidArgument, "search precision must be positive");
  std::int64_t M = 1;
  for (int i = 0; i < k; ++i) {
    M *= p;
    if (M > (1 << 13)) fail(ErrorCode::InvalidArgument, "search modulus p^k exceeds 2^13");
  }
  if (a.precision() < k || b.precision() < k) fail(ErrorCode::PrecisionTooLow, "coefficients known to fewer than k digits");

  // Scaling x, y by powers of p leaves only the parity of the valuations.
  const PadicNumber an = a.unit_part().shift(a.valuation() % 2);
  const PadicNumber bn = b.unit_part().shift(b.valuation() % 2);
  const std::int64_t A = small_lift(an, M), B = small_lift(bn, M);
  const auto Mu = static_cast<std::uint32_t>(M);

  QfResult res;
  std::optional<std::array<std::int64_t, 3>> liftable;
  bool any = false;
  // Valuations of the partials 2Ax, 2By, -2z at a solution.
  auto try_solution = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    any = true;
    const int e = std::min({vp(2 * A % M * x % M, p, k), vp(2 * B % M * y % M, p, k), vp(2 * z % M, p, k)});
    if (2 * e < k && !liftable) liftable = std::array<std::int64_t, 3>{x, y, z};
  };
  std::vector<std::uint32_t> roots;
  auto scan = [&](std::int64_t x, std::int64_t y) {
    ++res.candidates;
    const std::int64_t c = (A * (x * x % M) + B * (y * y % M)) % M;
    roots.clear();
    square_roots_mod(static_cast<std::uint32_t>(c), Mu, roots, impl);
    for (auto z : roots) try_solution(x, y, z);
  };
  // Primitive triples up to unit scaling: x = 1; or p | x, y = 1; or p | x, p | y, z = 1.
  for (std::int64_t y = 0; y < M && !liftable; ++y) scan(1, y);
  for (std::int64_t x = 0; x < M && !liftable; x += p) scan(x, 1);
  for (std::int64_t x = 0; x < M && !liftable; x += p)
    for (std::int64_t y = 0; y < M && !liftable; y += p) {
      ++res.candidates;
      if ((A * (x * x % M) + B * (y * y % M)) % M == 1 % M) try_solution(x, y, 1);
    }

  if (!any) return res;
  if (!liftable) fail(ErrorCode::PrecisionTooLow, "solutions mod p^k exist but none satisfies the lifting criterion");

  // Lift in the coordinate with the smallest partial valuation.
  const auto [x, y, z] = *liftable;
  const int target = std::min({2 * k, an.absolute_precision(), bn.absolute_precision(), PadicNumber::max_precision(p) - 2 * k - 4});
  const int work = target + k + 2;
  std::array<PadicNumber, 3> s{PadicNumber::from_int(p, x, work), PadicNumber::from_int(p, y, work), PadicNumber::from_int(p, z, work)};
  const std::array<PadicNumber, 3> coef{an.with_precision(work), bn.with_precision(work), -PadicNumber::from_int(p, 1, work)};
  int best = 0, best_v = k + 1;
  for (int i = 0; i < 3; ++i) {
    const PadicNumber d = coef[i] * s[i] * PadicNumber::from_int(p, 2, work);
    const int v = d.is_zero() ? k + 1 : d.valuation();
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  PadicNumber rest = PadicNumber::exact_zero(p, work);
  for (int i = 0; i < 3; ++i)
    if (i != best) rest = rest + coef[i] * s[i] * s[i];
  const Poly<PadicNumber> f(rest, {rest, rest.zero(), coef[best]});
  s[best] = hensel_lift(f, s[best], target);
  const PadicNumber check = coef[0] * s[0] * s[0] + coef[1] * s[1] * s[1] + coef[2] * s[2] * s[2];
  if (!check.is_zero() && check.valuation() < target) fail(ErrorCode::PrecisionExhausted, "lifted solution fails re-verification");
  res.solvable = true;
  res.approx = *liftable;
  res.lifted = s;
  res.verified_precision = target;
  return res;
}

}  // namespace milnor
