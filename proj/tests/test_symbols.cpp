#include "milnor/ff_kgroup.hpp"
#include "milnor/local.hpp"
#include "milnor/numtheory.hpp"
#include "milnor/serialize.hpp"
#include "milnor/snf.hpp"
#include "milnor/symbols.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace milnor;

namespace {

using FqClass = MilnorClass<FqElem>;

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (auto& r : rows) {
    IntVector v;
    for (long x : r) v.push_back(BigInt(x));
    m.push_back(v);
  }
  return m;
}

// gcd of all k x k minors, by brute-force subset enumeration.
BigInt minor_gcd(const IntMatrix& a, std::size_t k) {
  const std::size_t r = a.size(), c = a.front().size();
  BigInt g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t depth, std::size_t from) {
    if (depth == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t i = from; i < r; ++i) {
      rs[depth] = i;
      pick_rows(depth + 1, i + 1);
    }
  };
  pick_cols = [&](std::size_t depth, std::size_t from) {
    if (depth == k) {
      IntMatrix m(k, IntVector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = a[rs[i]][cs[j]];
      BigInt d = determinant(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t j = from; j < c; ++j) {
      cs[depth] = j;
      pick_cols(depth + 1, j + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

// Subgroup of Z/(p-1) generated by the Steinberg relators of F_p, by brute force
// over integers: logs from the oracle primitive root, pairs (x, 1-x) by exhaustion.
std::int64_t oracle_k2_order(std::int64_t p, int n) {
  if (p == 2) return 1;
  std::int64_t g = oracle::smallest_primitive_root(p);
  std::vector<std::int64_t> log(static_cast<std::size_t>(p), -1);
  std::int64_t x = 1;
  for (std::int64_t e = 0; e < p - 1; ++e) {
    log[static_cast<std::size_t>(x)] = e;
    x = x * g % p;
  }
  std::int64_t d = p - 1;
  for (std::int64_t a = 2; a < p; ++a) {
    std::int64_t b = (1 - a + p) % p;
    if (b == 0) continue;
    std::int64_t v = log[static_cast<std::size_t>(a)] * log[static_cast<std::size_t>(b)];
    for (int extra = 2; extra < n; ++extra) v *= 1;  // {g} in the remaining slots
    d = std::gcd(d, v);
  }
  return d;
}

}  // namespace

TEST(Snf, KnownValues) {
  auto s = smith_normal_form(mat({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.diagonal(), (IntVector{1, 6}));
  auto id = smith_normal_form(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(id.D, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto z = smith_normal_form(mat({{0}}));
  EXPECT_EQ(z.D, mat({{0}}));
}

TEST(Snf, RandomMatricesMatchDeterminantalDivisors) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a(r, IntVector(c));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<long>(rng() % 41) - 20;
    auto s = smith_normal_form(a);
    ASSERT_TRUE(verify_smith(a, s));
    IntVector d = s.diagonal();
    BigInt prefix = 1;
    for (std::size_t k = 1; k <= d.size(); ++k) {
      prefix *= d[k - 1];
      EXPECT_EQ(prefix, minor_gcd(a, k)) << trial;
    }
  }
}

TEST(Snf, ExpressInRelators) {
  auto p = AbGroupPresentation::make(2, mat({{2, 4}, {0, 6}}));
  auto c = express_in_relators(p, IntVector{2, 4});
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (IntVector{1, 0}));
  auto zero = express_in_relators(p, IntVector{0, 0});
  ASSERT_TRUE(zero);
  EXPECT_EQ(*zero, (IntVector{0, 0}));
  auto p1 = AbGroupPresentation::make(1, mat({{2}}));
  EXPECT_FALSE(express_in_relators(p1, IntVector{1}));

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, g = 1 + rng() % 3;
    IntMatrix a(r, IntVector(g));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<long>(rng() % 21) - 10;
    auto pres = AbGroupPresentation::make(g, a);
    IntVector coeffs(r);
    for (auto& x : coeffs) x = static_cast<long>(rng() % 11) - 5;
    IntVector v(g, BigInt(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < g; ++j) v[j] += coeffs[i] * a[i][j];
    auto c2 = express_in_relators(pres, v);
    ASSERT_TRUE(c2);
    IntVector back(g, BigInt(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < g; ++j) back[j] += (*c2)[i] * a[i][j];
    EXPECT_EQ(back, v);
  }
}

TEST(FfKGroup, KnownValues) {
  EXPECT_EQ(ff_kgroup(5, 1).invariant_factors(), (IntVector{4}));
  EXPECT_TRUE(ff_kgroup(5, 2).invariant_factors().empty());
  EXPECT_TRUE(ff_kgroup(9, 3).invariant_factors().empty());
  EXPECT_EQ(ff_kgroup(7, 0).invariant_factors(), (IntVector{0}));
  try {
    ff_kgroup(5, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooLarge);
  }
  try {
    ff_kgroup(2048, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldTooLarge);
  }
}

TEST(FfKGroup, PrimeFieldsMatchBruteForce) {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 101}) {
    for (int n = 1; n <= 3; ++n) {
      std::int64_t expected = n == 1 ? p - 1 : oracle_k2_order(p, n);
      EXPECT_EQ(ff_kgroup(p, n).order(), expected) << p << " " << n;
    }
  }
}

TEST(FfKGroup, VanishingForAllSmallFields) {
  for (std::int64_t q = 2; q <= 1024; ++q) {
    if (prime_power(q).first == 0) continue;
    EXPECT_TRUE(ff_kgroup(q, 2).invariant_factors().empty()) << q;
  }
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    EXPECT_TRUE(ff_kgroup(q, 3).invariant_factors().empty());
    EXPECT_TRUE(ff_kgroup(q, 4).invariant_factors().empty());
    auto k1 = ff_kgroup(q, 1).invariant_factors();
    if (q == 2) {
      EXPECT_TRUE(k1.empty());
    } else {
      EXPECT_EQ(k1, (IntVector{q - 1}));
    }
  }
}

TEST(FfKGroup, RelatorsAreSteinbergSymbols) {
  for (std::int64_t q : {4, 7, 9, 16, 25}) {
    const FiniteField& k = FiniteField::of_order(q);
    auto g = ff_kgroup(q, 3);
    for (const auto& t : g.relator_exponents) {
      if (t.empty()) continue;
      std::vector<FqElem> e;
      for (auto x : t) e.push_back(k.from_exponent(x));
      EXPECT_TRUE(is_steinberg_relator(e));
    }
  }
}

TEST(Symbols, SteinbergCoordinateVanishes) {
  std::mt19937_64 rng(23);
  for (std::int64_t q : {5, 7, 8, 9, 16, 27, 49}) {
    const FiniteField& k = FiniteField::of_order(q);
    // The full T_2 = Z/(q-1), to test against relators before quotienting.
    auto k2 = ff_kgroup(q, 2);
    for (int i = 0; i < 1000; ++i) {
      FqElem x = k.from_exponent(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q - 1)));
      if (x.is_one()) continue;
      auto c = FqClass::symbol({x, k.one() - x});
      EXPECT_TRUE(is_steinberg_relator(c.single_term().first));
      EXPECT_EQ(k2.coordinate(c), 0);
    }
  }
}

TEST(Symbols, SymbolAndProduct) {
  const FiniteField& k = FiniteField::get(5, 1);
  auto s = FqClass::symbol({k.from_int(2), k.from_int(3)});
  EXPECT_EQ(s.degree(), 2);
  EXPECT_EQ(s.size(), 1u);
  auto empty = FqClass::symbol({});
  EXPECT_EQ(empty, FqClass::integer(1));
  EXPECT_THROW(FqClass::symbol({k.zero()}), Error);

  auto x = FqClass::symbol({k.from_int(2)});
  auto y = FqClass::symbol({k.from_int(3)});
  EXPECT_EQ(product(x, y), s);
  EXPECT_EQ(product(x.scaled(2), y), s.scaled(2));
  EXPECT_EQ(product(x, FqClass::integer(1)), x);

  const FiniteField& k7 = FiniteField::get(7, 1);
  EXPECT_THROW(x + FqClass::symbol({k7.from_int(2)}), Error);
  try {
    product(x, FqClass::symbol({k7.from_int(3)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContextMismatch);
  }
}

TEST(Symbols, PadicSymbolsAndRewrites) {
  auto pz = [](std::int64_t n) { return PadicNumber::from_int(5, n, 6); };
  using PClass = MilnorClass<PadicNumber>;
  auto s = PClass::symbol({pz(6), pz(5)});
  EXPECT_EQ(s.single_term().first[1].valuation(), 1);

  PadicNumber u = pz(7);
  auto ex = expand_entry(PClass::symbol({pz(6), u}), 0, pz(2), pz(3));
  EXPECT_EQ(ex, PClass::symbol({pz(2), u}) + PClass::symbol({pz(3), u}));
  EXPECT_THROW(expand_entry(PClass::symbol({pz(6), u}), 0, pz(2), pz(4)), Error);

  auto sq = expand_entry(PClass::symbol({pz(4), u}), 0, pz(2), pz(2));
  EXPECT_EQ(sq, PClass::symbol({pz(2), u}).scaled(2));

  auto neg = expand_entry(PClass::symbol({pz(-3), u}), 0, pz(-1), pz(3));
  EXPECT_EQ(neg, PClass::symbol({pz(-1), u}) + PClass::symbol({pz(3), u}));

  EXPECT_TRUE(apply_identity(PClass::symbol({pz(5), pz(-5)}), Identity::MinusSelf, 0).is_zero());
  try {
    apply_identity(PClass::symbol({pz(5), pz(7)}), Identity::MinusSelf, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PatternMismatch);
  }
}

TEST(Symbols, SwapAndIdentities) {
  const FiniteField& k = FiniteField::get(5, 1);
  FqElem x = k.from_int(2), y = k.from_int(3), z = k.from_int(4);
  EXPECT_EQ(swap(FqClass::symbol({x, y}), 0, 1), -FqClass::symbol({y, x}));
  EXPECT_EQ(swap(FqClass::symbol({x, y, z}), 0, 2), -FqClass::symbol({z, y, x}));
  try {
    swap(FqClass::symbol({x, y}), 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadPosition);
  }
  EXPECT_TRUE(is_steinberg_relator(std::vector<FqElem>{k.from_int(2), k.from_int(4)}));
  EXPECT_TRUE(is_steinberg_relator(std::vector<FqElem>{k.from_int(3), k.from_int(3)}));
  EXPECT_FALSE(is_steinberg_relator(std::vector<FqElem>{k.from_int(2), -k.from_int(2)}));

  const FiniteField& k3 = FiniteField::get(3, 1);
  LaurentSeries t = LaurentSeries::constant(k3.one(), 5).shift(1);
  using LClass = MilnorClass<LaurentSeries>;
  auto r = apply_identity(LClass::symbol({t, t}), Identity::SelfToMinusOne, 0);
  EXPECT_EQ(r, LClass::symbol({t, LaurentSeries::constant(k3.from_int(2), 5)}));
}

TEST(Symbols, RewritesPreserveFfCoordinates) {
  std::mt19937_64 rng(29);
  for (std::int64_t q : {7, 9, 13}) {
    const FiniteField& k = FiniteField::of_order(q);
    auto k1 = ff_kgroup(q, 1);
    auto k0 = ff_kgroup(q, 0);
    auto rnd = [&] { return k.from_exponent(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q - 1))); };
    for (int i = 0; i < 200; ++i) {
      FqElem a = rnd(), b = rnd();
      auto c = FqClass::symbol({a * b});
      EXPECT_EQ(k1.coordinate(c), k1.coordinate(expand_entry(c, 0, a, b)));
      // Graded commutativity with a degree-0 factor.
      auto n = FqClass::integer(static_cast<long>(rng() % 7));
      EXPECT_EQ(k1.coordinate(product(c, n)), k1.coordinate(product(n, c)));
      EXPECT_EQ(k0.coordinate(product(n, n)), k0.coordinate(n) * k0.coordinate(n));
    }
  }
}

TEST(Symbols, SerializationRoundTrips) {
  const FiniteField& k = FiniteField::get(5, 1);
  auto c = FqClass::symbol({k.from_int(2), k.from_int(3)}).scaled(3) - FqClass::symbol({k.from_int(4), k.from_int(4)});
  std::string s = c.str();
  EXPECT_EQ(parse_milnor<FqElem>(s, [](std::string_view e) { return parse_ff(e); }), c);
  EXPECT_EQ(FqClass(2).str(), "deg:2 0");
  auto z = MilnorClass<PadicNumber>::symbol({PadicNumber::from_int(5, 50, 4), PadicNumber::from_int(5, 7, 4)});
  EXPECT_EQ(parse_milnor<PadicNumber>(z.str(), [](std::string_view e) { return parse_padic(e); }), z);
  EXPECT_EQ(parse_milnor<FqElem>("deg:0 -5", [](std::string_view e) { return parse_ff(e); }), FqClass::integer(-5));
}
