#include "milnor/extension.hpp"
#include "milnor/finite_field.hpp"
#include "milnor/local.hpp"
#include "milnor/numtheory.hpp"
#include "milnor/poly_factor.hpp"
#include "milnor/ratfunc.hpp"
#include "milnor/serialize.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace milnor;

namespace {

FqPoly int_poly(const FiniteField& k, std::initializer_list<std::int64_t> low_to_high) {
  std::vector<FqElem> cs;
  for (auto c : low_to_high) cs.push_back(k.from_int(c));
  return FqPoly(k.zero(), cs);
}

oracle::IntPoly to_int_poly(const FqPoly& f) {
  oracle::IntPoly r;
  for (const auto& c : f.coeffs()) r.push_back(c.code());
  return r;
}

FqElem random_elem(const FiniteField& k, std::mt19937_64& rng) {
  return k.from_code(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k.order())));
}

PadicNumber pz(std::int64_t p, std::int64_t n, int prec) { return PadicNumber::from_int(p, n, prec); }

Poly<PadicNumber> padic_poly(std::int64_t p, int prec, std::initializer_list<std::int64_t> low_to_high) {
  std::vector<PadicNumber> cs;
  for (auto c : low_to_high) cs.push_back(pz(p, c, prec));
  return Poly<PadicNumber>(pz(p, 1, prec).zero(), cs);
}

}  // namespace

TEST(FiniteField, PrimeFieldGeneratorIsSmallestPrimitiveRoot) {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 101}) {
    EXPECT_EQ(FiniteField::get(p, 1).generator().code(), oracle::smallest_primitive_root(p)) << p;
  }
  EXPECT_EQ(FiniteField::get(5, 1).generator().code(), 2);
  EXPECT_EQ(FiniteField::get(2, 1).generator().code(), 1);
}

TEST(FiniteField, ModulusIsSmallestIrreducible) {
  for (auto [p, f] : std::vector<std::pair<std::int64_t, int>>{{3, 2}, {2, 3}, {2, 4}, {5, 2}, {3, 3}, {7, 2}}) {
    const FiniteField& k = FiniteField::get(p, f);
    std::int64_t count = ipow(p, f);
    oracle::IntPoly expected;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      auto cand = oracle::monic_from_index(idx, f, p);
      if (oracle::irreducible(cand, p)) {
        expected = cand;
        break;
      }
    }
    EXPECT_EQ(k.modulus(), expected) << p << "^" << f;
  }
  EXPECT_EQ(FiniteField::get(3, 2).modulus(), (std::vector<std::int64_t>{1, 0, 1}));
}

TEST(FiniteField, RejectsBadInput) {
  EXPECT_THROW(FiniteField::get(6, 1), Error);
  EXPECT_THROW(FiniteField::of_order(12), Error);
  try {
    FiniteField::get(2, 40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldTooLarge);
  }
}

TEST(FiniteField, GeneratorHasFullOrderAndDlogRoundTrips) {
  for (std::int64_t q : {2, 4, 8, 9, 16, 25, 27, 49, 64, 81, 125, 243, 256}) {
    const FiniteField& k = FiniteField::of_order(q);
    EXPECT_EQ(k.generator().order(), q - 1);
    FqElem x = k.one();
    for (std::int64_t e = 0; e < q - 1; ++e) {
      EXPECT_EQ(k.exponent_of_code(x.code()), e);
      x *= k.generator();
    }
    EXPECT_TRUE(x.is_one());
  }
}

TEST(FiniteField, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  // Includes contexts above the table limit to exercise the generic dlog.
  for (auto [p, f] : std::vector<std::pair<std::int64_t, int>>{{5, 1}, {2, 8}, {3, 5}, {2, 17}, {131071, 1}}) {
    const FiniteField& k = FiniteField::get(p, f);
    const int trials = k.has_tables() ? 10000 : 400;
    for (int i = 0; i < trials; ++i) {
      FqElem a = random_elem(k, rng), b = random_elem(k, rng), c = random_elem(k, rng);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      if (!a.is_zero()) ASSERT_TRUE((a * a.inv()).is_one());
    }
  }
}

TEST(FiniteField, CodeArithmeticMatchesIntegerArithmeticInPrimeField) {
  const FiniteField& k = FiniteField::get(13, 1);
  for (std::int64_t a = 0; a < 13; ++a)
    for (std::int64_t b = 0; b < 13; ++b) {
      EXPECT_EQ((k.from_int(a) + k.from_int(b)).code(), (a + b) % 13);
      EXPECT_EQ((k.from_int(a) * k.from_int(b)).code(), a * b % 13);
    }
}

TEST(PolyFactor, KnownValues) {
  const FiniteField& f2 = FiniteField::get(2, 1);
  auto r1 = poly_factor(int_poly(f2, {0, 1, 1}));
  ASSERT_EQ(r1.factors.size(), 2u);
  EXPECT_EQ(r1.factors[0].first, int_poly(f2, {0, 1}));
  EXPECT_EQ(r1.factors[1].first, int_poly(f2, {1, 1}));

  const FiniteField& f3 = FiniteField::get(3, 1);
  auto r2 = poly_factor(int_poly(f3, {1, 0, 1}));
  ASSERT_EQ(r2.factors.size(), 1u);
  EXPECT_EQ(r2.factors[0].first, int_poly(f3, {1, 0, 1}));
  EXPECT_TRUE(oracle::roots({1, 0, 1}, 3).empty());

  const FiniteField& f5 = FiniteField::get(5, 1);
  auto r3 = poly_factor(int_poly(f5, {0, -1, 0, 1}));
  auto roots = oracle::roots({0, 4, 0, 1}, 5);
  ASSERT_EQ(roots, (std::vector<std::int64_t>{0, 1, 4}));
  ASSERT_EQ(r3.factors.size(), 3u);
  EXPECT_EQ(r3.factors[0].first, int_poly(f5, {0, 1}));
  EXPECT_EQ(r3.factors[1].first, int_poly(f5, {1, 1}));
  EXPECT_EQ(r3.factors[2].first, int_poly(f5, {4, 1}));
  for (auto& [g, m] : r3.factors) EXPECT_EQ(m, 1);

  EXPECT_THROW(poly_factor(FqPoly(f5.zero())), Error);
}

TEST(PolyFactor, RandomProductsReassembleExactly) {
  std::mt19937_64 rng(11);
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25}) {
    const FiniteField& k = FiniteField::of_order(q);
    for (int trial = 0; trial < 25; ++trial) {
      int deg = 1 + static_cast<int>(rng() % 9);
      FqPoly f = random_poly(k, deg, rng, false);
      if (f.is_zero()) continue;
      // Force repeated factors sometimes.
      if (trial % 3 == 0) f = f * f;
      auto fac = poly_factor(f);
      FqPoly prod = FqPoly::constant(fac.leading);
      for (auto& [g, m] : fac.factors) {
        EXPECT_TRUE(g.is_monic());
        if (k.degree() == 1 && g.degree() <= 4) EXPECT_TRUE(oracle::irreducible(to_int_poly(g), q));
        for (int i = 0; i < m; ++i) prod = prod * g;
      }
      EXPECT_EQ(prod, f);
      for (std::size_t i = 1; i < fac.factors.size(); ++i) EXPECT_TRUE(fac.factors[i - 1].first < fac.factors[i].first);
    }
  }
}

TEST(PolyFactor, IrreducibleCountsMatchNecklaceFormula) {
  // Number of monic irreducibles of degree d over F_q: (1/d) sum_{e|d} mu(e) q^{d/e}.
  auto mobius = [](int n) {
    int r = 1;
    for (int d = 2; d <= n; ++d) {
      if (n % d) continue;
      n /= d;
      if (n % d == 0) return 0;
      r = -r;
    }
    return r;
  };
  for (std::int64_t q : {2, 3, 4, 5}) {
    const FiniteField& k = FiniteField::of_order(q);
    for (int d = 1; d <= 4; ++d) {
      std::int64_t s = 0;
      for (int e = 1; e <= d; ++e)
        if (d % e == 0) s += mobius(e) * ipow(q, d / e);
      EXPECT_EQ(static_cast<std::int64_t>(monic_irreducibles(k, d).size()), s / d) << q << " " << d;
    }
  }
}

TEST(Padic, IntegerArithmeticAgreesWithBigIntegers) {
  std::mt19937_64 rng(3);
  for (std::int64_t p : {2, 3, 5, 7}) {
    const int N = 6;
    const std::int64_t pN = ipow(p, N);
    for (int i = 0; i < 2000; ++i) {
      std::int64_t a = static_cast<std::int64_t>(rng() % 100000) - 50000;
      std::int64_t b = static_cast<std::int64_t>(rng() % 100000) - 50000;
      if (a == 0 || b == 0) continue;
      PadicNumber x = pz(p, a, N), y = pz(p, b, N);
      // Known modulo p^(v + N): compare at the common absolute precision.
      int absp = std::min(x.absolute_precision(), y.absolute_precision());
      EXPECT_TRUE((x + y).congruent(pz(p, a + b, N + 4), absp));
      EXPECT_TRUE((x * y).congruent(pz(p, a * b, N + 4), x.valuation() + y.valuation() + N));
      EXPECT_TRUE((x * x.inv()).congruent(pz(p, 1, N), N));
      (void)pN;
    }
  }
}

TEST(Padic, PrecisionTracking) {
  PadicNumber a = pz(5, 1, 3), b = pz(5, -1, 3);
  PadicNumber s = a + b;
  EXPECT_TRUE(s.is_zero());
  EXPECT_FALSE(s.is_exact_zero());
  EXPECT_EQ(s.absolute_precision(), 3);
  PadicNumber c = pz(5, 26, 3) - pz(5, 1, 3);  // 25 known mod 125
  EXPECT_EQ(c.valuation(), 2);
  EXPECT_EQ(c.precision(), 1);
  EXPECT_EQ((pz(5, 50, 4) * pz(5, 3, 2)).precision(), 2);
}

TEST(Padic, HenselKnownValues) {
  auto f = padic_poly(5, 3, {-2, 0, 0, 1});
  PadicNumber r = hensel_lift(f, pz(5, 3, 1), 3);
  EXPECT_EQ(r.lift(), 53);
  EXPECT_EQ(r.absolute_precision(), 3);
  EXPECT_EQ(oracle::powmod(53, 3, 125), 2);

  auto g = padic_poly(5, 2, {-6, 0, 1});
  PadicNumber s = hensel_lift(g, pz(5, 1, 1), 2);
  EXPECT_EQ(s.lift(), 16);
  EXPECT_EQ(16 * 16 % 25, 6);

  auto lin = padic_poly(5, 4, {-17, 1});
  EXPECT_EQ(hensel_lift(lin, pz(5, 17, 4), 4).lift(), 17);
}

TEST(Padic, HenselConditionAndConsistency) {
  // X^2 - 3 over Z_2: f(1) = -2, f'(1) = 2, |f| = |f'|^... fails.
  auto f = padic_poly(2, 8, {-3, 0, 1});
  try {
    hensel_lift(f, pz(2, 1, 8), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NewtonConditionFails);
  }
  // X^2 - 17 over Z_2 from 1: v(f(1)) = 4 > 2 v(f'(1)) = 2.
  auto g = padic_poly(2, 20, {-17, 0, 1});
  PadicNumber r = hensel_lift(g, pz(2, 1, 3), 10);
  EXPECT_TRUE((r * r).congruent(pz(2, 17, 20), 10));

  std::mt19937_64 rng(5);
  for (std::int64_t p : {3, 5, 7, 11}) {
    for (int i = 0; i < 50; ++i) {
      std::int64_t c = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1));
      std::int64_t a = c * c + p * static_cast<std::int64_t>(rng() % 1000);
      auto h = padic_poly(p, 12, {-a, 0, 1});
      PadicNumber x5 = hensel_lift(h, pz(p, c, 1), 5);
      PadicNumber x10 = hensel_lift(h, x5, 10);
      PadicNumber direct = hensel_lift(h, pz(p, c, 1), 10);
      EXPECT_EQ(x10, direct);
      EXPECT_TRUE(x10.congruent(x5, 5));
      EXPECT_TRUE(h.eval(direct.with_precision(12)).valuation() >= 10);
    }
  }
}

TEST(Padic, TeichmullerExamplesAndProperties) {
  PadicNumber w = teichmuller(pz(5, 7, 2));
  EXPECT_EQ(w.lift(), 7);
  EXPECT_EQ(oracle::powmod(7, 4, 25), 1);
  EXPECT_EQ(teichmuller(pz(5, 6, 6)), pz(5, 1, 6));
  EXPECT_EQ(teichmuller(pz(7, 8, 4)), pz(7, 1, 4));

  std::mt19937_64 rng(9);
  for (std::int64_t p : {2, 3, 5, 7, 13}) {
    const int N = 6;
    for (int i = 0; i < 200; ++i) {
      std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 100000);
      std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 100000);
      if (a % p == 0 || b % p == 0) continue;
      PadicNumber x = pz(p, a, N), y = pz(p, b, N);
      PadicNumber wx = teichmuller(x), wy = teichmuller(y);
      EXPECT_EQ(wx.pow(p - 1), pz(p, 1, N));
      EXPECT_EQ(teichmuller(x * y), wx * wy);
      EXPECT_TRUE((x / wx).in_principal_units());
      EXPECT_EQ(wx.residue(), x.residue());
    }
  }
  EXPECT_THROW(teichmuller(pz(5, 10, 3)), Error);
}

TEST(Padic, UnitDecompose) {
  auto F = padic_field(5, 6);
  auto [k, u] = unit_decompose(pz(5, 50, 6), F);
  EXPECT_EQ(k, 2);
  EXPECT_EQ(u.lift(), 2);
  auto [k0, u0] = unit_decompose(pz(5, 7, 6), F);
  EXPECT_EQ(k0, 0);
  EXPECT_EQ(u0, pz(5, 7, 6));
  EXPECT_THROW(unit_decompose(pz(5, 0, 6), F), Error);

  // Uniformizer 10 instead of 5: 50 = (50/100) * 10^2.
  auto G = with_uniformizer(F, pz(5, 10, 6));
  auto [k2, u2] = unit_decompose(pz(5, 50, 6), G);
  EXPECT_EQ(k2, 2);
  EXPECT_EQ(u2 * G.pi.pow(2), pz(5, 50, 6));
}

TEST(Laurent, ArithmeticMatchesTruncatedPolynomialProducts) {
  std::mt19937_64 rng(13);
  for (std::int64_t q : {2, 3, 4, 9}) {
    const FiniteField& k = FiniteField::of_order(q);
    const int N = 7;
    for (int i = 0; i < 200; ++i) {
      std::vector<FqElem> a(N), b(N);
      for (auto& c : a) c = random_elem(k, rng);
      for (auto& c : b) c = random_elem(k, rng);
      a[0] = a[0].is_zero() ? k.one() : a[0];
      b[0] = b[0].is_zero() ? k.one() : b[0];
      LaurentSeries x = LaurentSeries::from_coeffs(k, 0, a), y = LaurentSeries::from_coeffs(k, 0, b);
      LaurentSeries xy = x * y;
      for (int d = 0; d < N; ++d) {
        FqElem acc = k.zero();
        for (int j = 0; j <= d; ++j) acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(d - j)];
        ASSERT_EQ(xy.coeff(d), acc);
      }
      EXPECT_EQ(x * x.inv(), LaurentSeries::constant(k.one(), N));
      EXPECT_EQ((x + y) - y, x);
    }
  }
}

TEST(Laurent, TeichmullerAndDecompose) {
  const FiniteField& k = FiniteField::get(2, 1);
  auto F = laurent_field(2, 6);
  // t^-3 * (1 + t)
  LaurentSeries x = LaurentSeries::from_coeffs(k, -3, {k.one(), k.one(), k.zero(), k.zero(), k.zero(), k.zero()});
  auto [v, u] = unit_decompose(x, F);
  EXPECT_EQ(v, -3);
  EXPECT_EQ(u, LaurentSeries::from_coeffs(k, 0, {k.one(), k.one(), k.zero(), k.zero(), k.zero(), k.zero()}));

  const FiniteField& k9 = FiniteField::get(3, 2);
  LaurentSeries y = LaurentSeries::from_coeffs(k9, 0, {k9.generator(), k9.one(), k9.zero(), k9.one()});
  EXPECT_EQ(teichmuller(y), LaurentSeries::constant(k9.generator(), 4));
}

TEST(Laurent, HenselSquareRoot) {
  const FiniteField& k = FiniteField::get(3, 1);
  const int N = 8;
  LaurentSeries one_t = LaurentSeries::from_coeffs(k, 0, {k.one(), k.one(), k.zero(), k.zero(), k.zero(), k.zero(), k.zero(), k.zero()});
  LaurentSeries s = principal_root(one_t, 2, N);
  EXPECT_TRUE((s * s).congruent(one_t, N));
  EXPECT_TRUE(s.in_principal_units());
}

TEST(Serialize, RoundTrips) {
  for (const char* s : {"ff(5,1):g^3", "ff(5,1):0", "ff(3,2):g^7", "padic(5,3):53*5^0", "padic(5,4):2*5^2",
                        "padic(7,2):O(7^5)", "padic(3,4):0", "laurent(3,4):t^-2*(1,0,2,1)", "laurent(9,3):t^0*(g^3,0,g^1)",
                        "laurent(2,5):O(t^7)", "laurent(4,2):0"}) {
    AnyElement e = parse_element(s);
    std::string back = std::visit([](const auto& x) { return x.str(); }, e);
    EXPECT_EQ(back, s);
  }
  EXPECT_EQ(parse_ff("ff(5,1):3"), FiniteField::get(5, 1).from_int(3));
  EXPECT_EQ(parse_padic("padic(5,3):50"), pz(5, 50, 3));
  EXPECT_EQ(parse_padic("padic(5,3):-1").lift(), 124);
  EXPECT_THROW(parse_padic("padic(5,3):10*5^1"), Error);
  EXPECT_THROW(parse_element("ff(4,1):1"), Error);
  EXPECT_THROW(parse_element("nonsense"), Error);
}

TEST(RatFuncAndExt, Basics) {
  const FiniteField& k = FiniteField::get(5, 1);
  FqPoly t = FqPoly::x(k.one());
  RatFunc<FqElem> a(t * t - FqPoly::constant(k.one()), t - FqPoly::constant(k.one()));
  EXPECT_EQ(a.den().degree(), 0);
  EXPECT_EQ(a.num(), t + FqPoly::constant(k.one()));
  EXPECT_EQ(a * a.inv(), a.one());

  auto F = Ext<FqElem>::make_field(int_poly(k, {2, 0, 1}));  // X^2 + 2 irreducible over F_5
  Ext<FqElem> th = Ext<FqElem>::generator(F);
  EXPECT_EQ(th * th, th.from_int(-2));
  EXPECT_EQ(th * th.inv(), th.one());
}
