#include "milnor/certificate.hpp"
#include "milnor/ff_kgroup.hpp"
#include "milnor/localk.hpp"
#include "milnor/serialize.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace milnor;

namespace {

using PClass = MilnorClass<PadicNumber>;
using LClass = MilnorClass<LaurentSeries>;
using FqClass = MilnorClass<FqElem>;

PadicNumber pz(std::int64_t p, std::int64_t n, int prec = 8) { return PadicNumber::from_int(p, n, prec); }

// Brute-force discrete log of a nonzero residue mod a prime p.
std::int64_t brute_dlog(std::int64_t p, std::int64_t g, std::int64_t x) {
  x = ((x % p) + p) % p;
  std::int64_t acc = 1;
  for (std::int64_t e = 0; e < p - 1; ++e) {
    if (acc == x) return e;
    acc = oracle::mulmod(acc, g, p);
  }
  ADD_FAILURE() << "no discrete log";
  return -1;
}

// Classical two-term tame symbol (-1)^{ab} y^a / x^b, reduced mod p; {pi, u} -> u.
std::int64_t classical_tame_residue(const PadicNumber& x, const PadicNumber& y) {
  const int a = x.valuation(), b = y.valuation();
  PadicNumber r = y.pow(a) / x.pow(b);
  if ((a * b) % 2 != 0) r = -r;
  return r.residue().code();
}

PadicNumber random_padic_nonzero(std::mt19937_64& rng, std::int64_t p, int prec, int vmax) {
  const int v = static_cast<int>(rng() % (vmax + 1));
  std::int64_t u;
  do {
    u = static_cast<std::int64_t>(rng() % 100000) + 1;
  } while (u % p == 0);
  return PadicNumber::from_parts(p, v, u, prec);
}

PadicNumber random_padic_unit(std::mt19937_64& rng, std::int64_t p, int prec) { return random_padic_nonzero(rng, p, prec, 0); }

LaurentSeries random_laurent_unit(std::mt19937_64& rng, const FiniteField& k, int prec) {
  std::vector<FqElem> c;
  c.push_back(k.from_exponent(static_cast<std::int64_t>(rng() % (k.order() - 1))));
  for (int i = 1; i < prec; ++i) c.push_back(k.from_code(static_cast<std::int64_t>(rng() % k.order())));
  return LaurentSeries::from_coeffs(k, 0, c).with_precision(prec);
}

template <class T>
void expect_certificate_ok(const DivisibilityCertificate<T>& c) {
  auto v = verify_certificate(c);
  EXPECT_TRUE(v.ok) << "step " << (v.failing_step ? std::to_string(*v.failing_step) : "final") << ": " << v.reason;
}

}  // namespace

TEST(Tame, KnownValues) {
  auto F = padic_field(5, 8);
  auto t1 = tame(PClass::symbol({pz(5, 5), pz(5, 2)}), F);
  const FiniteField& k5 = F.residue_field();
  EXPECT_EQ(t1, FqClass::symbol({k5.from_int(2)}));

  EXPECT_TRUE(tame(PClass::symbol({pz(5, 6), pz(5, 7)}), F).is_zero());

  auto t2 = tame(PClass::symbol({pz(5, 50), pz(5, 3)}), F);
  EXPECT_EQ(t2, FqClass::symbol({k5.from_int(3)}).scaled(2));

  auto L = laurent_field(3, 8);
  auto tt = tame(LClass::symbol({L.pi, L.pi}), L);
  EXPECT_EQ(tt, FqClass::symbol({L.residue_field().from_int(2)}));

  EXPECT_THROW(tame(PClass::symbol({pz(5, 0), pz(5, 2)}), F), Error);
}

TEST(Tame, AgreesWithClassicalFormula) {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {3, 5, 7, 11}) {
    auto F = padic_field(p, 10);
    FfKGroup k1 = ff_kgroup(p, 1);
    const std::int64_t g = F.residue_field().generator().code();
    for (int it = 0; it < 60; ++it) {
      auto x = random_padic_nonzero(rng, p, 10, 3);
      auto y = random_padic_nonzero(rng, p, 10, 3);
      auto t = tame(PClass::symbol({x, y}), F);
      const std::int64_t expected = brute_dlog(p, g, classical_tame_residue(x, y));
      EXPECT_EQ(k1.coordinate(t), BigInt(expected)) << x.str() << " " << y.str();
    }
  }
}

TEST(Tame, Additive) {
  std::mt19937_64 rng(12);
  auto F = padic_field(7, 8);
  for (int it = 0; it < 50; ++it) {
    auto a = PClass::symbol({random_padic_nonzero(rng, 7, 8, 2), random_padic_nonzero(rng, 7, 8, 2)});
    auto b = PClass::symbol({random_padic_nonzero(rng, 7, 8, 2), random_padic_nonzero(rng, 7, 8, 2)}).scaled(3);
    EXPECT_EQ(tame(a + b, F), tame(a, F) + tame(b, F));
  }
}

TEST(Tame, LinearityWithSign) {
  // d({x_1..x_k} . s) = (-1)^k {x_1..x_k} . d(s) for units x_i and s = {pi, u_2, ...}.
  std::mt19937_64 rng(13);
  auto F = padic_field(5, 8);
  for (int it = 0; it < 40; ++it) {
    const int k = 1 + static_cast<int>(rng() % 2);
    std::vector<PadicNumber> xs;
    std::vector<FqElem> xbar;
    for (int i = 0; i < k; ++i) {
      xs.push_back(random_padic_unit(rng, 5, 8));
      xbar.push_back(xs.back().residue());
    }
    auto s = PClass::symbol({F.pi, random_padic_unit(rng, 5, 8)});
    auto lhs = tame(product(PClass::symbol(xs), s), F);
    auto rhs = product(FqClass::symbol(xbar), tame(s, F));
    if (k % 2) rhs = -rhs;
    FfKGroup kk = ff_kgroup(5, k + 1);
    EXPECT_EQ(kk.coordinate(lhs), kk.coordinate(rhs));
    // Structurally identical once terms with an entry 1 (zero in K^M) are dropped.
    FqClass trimmed(rhs.degree());
    for (const auto& [e, c] : rhs.terms())
      if (std::none_of(e.begin(), e.end(), [](const FqElem& x) { return x.exponent() == 0; })) trimmed.add_term(e, c);
    EXPECT_EQ(lhs, trimmed) << lhs.str() << " vs " << trimmed.str();
  }
}

TEST(Tame, LaurentExactnessAtDeskScale) {
  // The tame symbol of {t, lift(c)} recovers c; pure unit classes have no tame image.
  auto L = laurent_field(9, 6);
  const FiniteField& k = L.residue_field();
  for (std::int64_t e = 0; e < 8; ++e) {
    const FqElem c = k.from_exponent(e);
    auto lifted = lift_mod_m(FqClass::symbol({c}), 2, L);
    auto a = product(LClass::symbol({L.pi}), lifted);
    if (c == k.one()) {
      EXPECT_TRUE(tame(a, L).is_zero());
    } else {
      EXPECT_EQ(tame(a, L), FqClass::symbol({c}));
    }
  }
  std::mt19937_64 rng(14);
  for (int it = 0; it < 20; ++it) {
    auto a = LClass::symbol({random_laurent_unit(rng, k, 6), random_laurent_unit(rng, k, 6)});
    auto gf = generator_form(a, L);
    EXPECT_TRUE(tame(gf, L).is_zero());
  }
}

TEST(GeneratorForm, KnownValues) {
  auto F = padic_field(5, 8);
  auto u = pz(5, 3), v = pz(5, 7);
  auto g = generator_form(PClass::symbol({pz(5, 75), v}), F);
  EXPECT_EQ(g, PClass::symbol({F.pi, v}).scaled(2) + PClass::symbol({u, v}));

  auto L = laurent_field(3, 6);
  auto tt = generator_form(LClass::symbol({L.pi, L.pi}), L);
  EXPECT_EQ(tt, LClass::symbol({L.pi, L.from_int(-1)}));

  auto uv = PClass::symbol({u, v});
  EXPECT_EQ(generator_form(uv, F), uv);
}

TEST(GeneratorForm, ShapeAndTameInvariance) {
  std::mt19937_64 rng(15);
  auto F = padic_field(3, 8);
  for (int it = 0; it < 40; ++it) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<PadicNumber> e;
    for (int i = 0; i < n; ++i) e.push_back(random_padic_nonzero(rng, 3, 8, 2));
    auto a = PClass::symbol(e);
    auto g = generator_form(a, F);
    for (const auto& [entries, c] : g.terms()) {
      int pis = 0;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].valuation() != 0) {
          EXPECT_EQ(i, 0u);
          EXPECT_TRUE(matches(entries[i], F.pi));
          ++pis;
        }
      }
      EXPECT_LE(pis, 1);
    }
    EXPECT_EQ(tame(g, F), tame(a, F));
  }
}

TEST(GeneratorForm, CustomUniformizer) {
  auto F = with_uniformizer(padic_field(5, 8), pz(5, 10));
  auto g = generator_form(PClass::symbol({pz(5, 50), pz(5, 3)}), F);
  // 50 = 2 * 10 * (5/2): v = 2, so 50 = 10^2 * (1/2).
  auto half = pz(5, 1) / pz(5, 2);
  EXPECT_EQ(g, PClass::symbol({F.pi, pz(5, 3)}).scaled(2) + PClass::symbol({half, pz(5, 3)}));
  EXPECT_THROW(with_uniformizer(padic_field(5, 8), pz(5, 25)), Error);
}

TEST(ReduceLift, KnownValues) {
  auto F = padic_field(5, 8);
  const FiniteField& k5 = F.residue_field();
  EXPECT_EQ(reduce_mod_m(PClass::symbol({pz(5, 6), pz(5, 7)}), 3, F), FqClass::symbol({k5.from_int(1), k5.from_int(2)}));
  EXPECT_THROW(reduce_mod_m(PClass::symbol({pz(5, 10), pz(5, 7)}), 3, F), Error);
  EXPECT_THROW(reduce_mod_m(PClass::symbol({pz(5, 6), pz(5, 7)}), 10, F), Error);

  auto L = laurent_field(3, 6);
  const FiniteField& k3 = L.residue_field();
  auto two_plus_t = L.from_int(2) + L.pi, one_plus_t = L.one() + L.pi;
  EXPECT_EQ(reduce_mod_m(LClass::symbol({two_plus_t, one_plus_t}), 2, L), FqClass::symbol({k3.from_int(2), k3.one()}));

  auto F2 = padic_field(5, 2);
  auto lifted = lift_mod_m(FqClass::symbol({k5.from_int(2)}), 3, F2);
  EXPECT_EQ(lifted, PClass::symbol({pz(5, 7, 2)}));
  EXPECT_EQ(lift_mod_m(FqClass::symbol({k5.one()}), 3, F2), PClass::symbol({pz(5, 1, 2)}));
  EXPECT_EQ(lift_mod_m(FqClass::symbol({k3.from_int(2)}), 2, L), LClass::symbol({LaurentSeries::constant(k3.from_int(2), 6)}));
  EXPECT_THROW(lift_mod_m(FqClass::symbol({k5.from_int(2)}), 5, F2), Error);
}

TEST(ReduceLift, ReduceAfterLiftIsIdentity) {
  std::mt19937_64 rng(16);
  for (std::int64_t q : {5, 7, 9, 25}) {
    const FiniteField& k = FiniteField::of_order(q);
    auto L = laurent_field(q, 5);
    for (int it = 0; it < 20; ++it) {
      std::vector<FqElem> e;
      for (int i = 0; i < 2; ++i) e.push_back(k.from_exponent(static_cast<std::int64_t>(rng() % (q - 1))));
      auto b = FqClass::symbol(e).scaled(1 + static_cast<long>(rng() % 3));
      EXPECT_EQ(reduce_mod_m(lift_mod_m(b, 2, L), 2, L), b);
      if (k.degree() == 1) {
        auto F = padic_field(q, 5);
        EXPECT_EQ(reduce_mod_m(lift_mod_m(b, 2, F), 2, F), b);
      }
    }
  }
}

TEST(ReduceLift, LiftAfterReduceDiffersByDivisibleClass) {
  std::mt19937_64 rng(17);
  auto F = padic_field(5, 6);
  for (int it = 0; it < 15; ++it) {
    auto a = PClass::symbol({random_padic_unit(rng, 5, 6), random_padic_unit(rng, 5, 6)});
    auto diff = a - lift_mod_m(reduce_mod_m(a, 3, F), 3, F);
    if (diff.is_zero()) continue;
    expect_certificate_ok(build_certificate(diff, 3, F));
  }
}

TEST(Certificate, RootOfPower) {
  auto F = padic_field(5, 8);
  auto x = pz(5, 7), y = pz(5, 3);
  auto c = divisibility_witness(PClass::symbol({x.pow(3), y}), 3, F);
  expect_certificate_ok(c);
  ASSERT_EQ(c.witness.terms().size(), 1u);
  const auto& [entries, coeff] = *c.witness.terms().begin();
  EXPECT_EQ(coeff, 1);
  EXPECT_TRUE(matches(entries[0].pow(3), x.pow(3)));
  EXPECT_TRUE(matches(entries[1], y));
  for (const auto& s : c.steps) EXPECT_EQ(s.kind, StepKind::HenselRoot);
}

TEST(Certificate, KnownValues) {
  auto F = padic_field(5, 3);
  auto c = divisibility_witness(PClass::symbol({pz(5, 6, 3), pz(5, 7, 3)}), 3, F);
  expect_certificate_ok(c);
  bool saw_root = false;
  for (const auto& s : c.steps)
    if (s.kind == StepKind::HenselRoot) {
      saw_root = true;
      EXPECT_TRUE(matches(s.root->pow(3), s.term[s.pos]));
    }
  EXPECT_TRUE(saw_root);

  auto L = laurent_field(3, 8);
  const FiniteField& k3 = L.residue_field();
  auto u = LaurentSeries::constant(k3.from_int(2), 8);
  auto cl = divisibility_witness(LClass::symbol({L.one() + L.pi, u}), 2, L);
  expect_certificate_ok(cl);
  ASSERT_EQ(cl.witness.terms().size(), 1u);
  const auto& [we, wc] = *cl.witness.terms().begin();
  EXPECT_EQ(wc, 1);
  EXPECT_TRUE(matches(we[0].pow(2), L.one() + L.pi));
  EXPECT_TRUE(matches(we[1], u));
}

TEST(Certificate, RejectsCorruptionAndMismatch) {
  auto F = padic_field(5, 6);
  auto c = divisibility_witness(PClass::symbol({pz(5, 6, 6), pz(5, 7, 6)}), 3, F);
  expect_certificate_ok(c);

  auto corrupt = c;
  std::size_t idx = 0;
  for (; idx < corrupt.steps.size(); ++idx)
    if (corrupt.steps[idx].kind == StepKind::HenselRoot) break;
  ASSERT_LT(idx, corrupt.steps.size());
  *corrupt.steps[idx].root = *corrupt.steps[idx].root + pz(5, 5, 6);
  auto v = verify_certificate(corrupt);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.failing_step, std::optional<std::size_t>(idx));
  EXPECT_NE(v.reason.find("HENSEL_ROOT"), std::string::npos);

  auto wrong = c;
  wrong.divisor = 2;
  v = verify_certificate(wrong);
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.failing_step.has_value());
}

TEST(Certificate, Errors) {
  auto F = padic_field(5, 6);
  EXPECT_THROW(divisibility_witness(PClass::symbol({pz(5, 10, 6), pz(5, 7, 6)}), 3, F), Error);
  EXPECT_THROW(divisibility_witness(PClass::symbol({pz(5, 6, 6), pz(5, 7, 6)}), 5, F), Error);
  EXPECT_THROW(divisibility_witness(PClass::symbol({pz(5, 6, 6), pz(5, 7, 6)}), 4, F), Error);
  EXPECT_THROW(divisibility_witness(PClass::symbol({pz(5, 6, 6)}), 3, F), Error);
  try {
    divisibility_witness(PClass::symbol({pz(5, 10, 6), pz(5, 7, 6)}), 3, F);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PiEntryPresent);
  }
  // Degree one: {2} is not a square class in Z_5.
  try {
    build_certificate(PClass::symbol({pz(5, 2, 6)}), 2, F);
    ADD_FAILURE() << "expected NotDivisible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
  }
}

TEST(Certificate, RandomClassesAlwaysVerify) {
  std::mt19937_64 rng(18);
  struct Case {
    std::int64_t p;
    std::int64_t ell;
  };
  for (auto [p, ell] : {Case{5, 2}, Case{5, 3}, Case{7, 3}, Case{2, 3}, Case{3, 2}, Case{13, 3}}) {
    auto F = padic_field(p, 6);
    for (int it = 0; it < 12; ++it) {
      const int n = 2 + static_cast<int>(rng() % 2);
      PClass a(n);
      for (int t = 0; t < 2; ++t) {
        std::vector<PadicNumber> e;
        for (int i = 0; i < n; ++i) e.push_back(random_padic_unit(rng, p, 6));
        a = a + PClass::symbol(e).scaled(1 + static_cast<long>(rng() % 3));
      }
      if (a.is_zero()) continue;
      auto c = divisibility_witness(a, ell, F);
      expect_certificate_ok(c);
    }
  }
  for (auto [q, ell] : {Case{3, 2}, Case{9, 2}, Case{4, 3}, Case{8, 7}}) {
    auto L = laurent_field(q, 5);
    const FiniteField& k = L.residue_field();
    for (int it = 0; it < 8; ++it) {
      auto a = LClass::symbol({random_laurent_unit(rng, k, 5), random_laurent_unit(rng, k, 5)});
      expect_certificate_ok(divisibility_witness(a, ell, L));
    }
  }
}

TEST(Certificate, TextRoundTrip) {
  auto F = padic_field(5, 6);
  auto c = divisibility_witness(PClass::symbol({pz(5, 2, 6), pz(5, 3, 6)}), 2, F);
  expect_certificate_ok(c);
  const std::string text = certificate_str(c, F.name());
  std::string field;
  auto back = parse_certificate<PadicNumber>(text, [](std::string_view s) { return parse_padic(s); }, &field);
  EXPECT_EQ(field, F.name());
  EXPECT_EQ(back.divisor, c.divisor);
  EXPECT_EQ(back.target, c.target);
  EXPECT_EQ(back.witness, c.witness);
  ASSERT_EQ(back.steps.size(), c.steps.size());
  EXPECT_TRUE(verify_certificate(back).ok);
  EXPECT_EQ(certificate_str(back, field), text);

  EXPECT_THROW(parse_certificate<PadicNumber>("certificate\nbogus\t1\nend\n", [](std::string_view s) { return parse_padic(s); }), Error);
  EXPECT_THROW(parse_certificate<PadicNumber>("certificate\ndivisor\t2\n", [](std::string_view s) { return parse_padic(s); }), Error);

  auto L = laurent_field(9, 4);
  auto cl = divisibility_witness(LClass::symbol({L.from_int(2) + L.pi, L.one() + L.pi.pow(2)}), 2, L);
  auto tl = certificate_str(cl, L.name());
  const FiniteField& k = L.residue_field();
  auto backl = parse_certificate<LaurentSeries>(tl, [&](std::string_view s) { return parse_laurent(s); });
  EXPECT_TRUE(verify_certificate(backl).ok);
  (void)k;
}
