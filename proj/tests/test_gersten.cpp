#include "milnor/error.hpp"
#include "milnor/gersten.hpp"

#include <gtest/gtest.h>

using namespace milnor;

TEST(Gersten, KnownValues) {
  std::mt19937_64 rng(61);
  auto r = gersten_check(laurent_field(3, 8), 2, 2, 50, rng);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.samples.size(), 50u);
  EXPECT_GE(r.kernel_cases(), 25u);
  auto r1 = gersten_check(laurent_field(2, 8), 1, 3, 20, rng);
  EXPECT_TRUE(r1.ok());
  try {
    gersten_check(padic_field(5, 8), 2, 2, 5, rng);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedCharRejected);
  }
  EXPECT_THROW(gersten_check(laurent_field(3, 8), 2, 3, 5, rng), Error);
}

TEST(Gersten, AllSmallCases) {
  std::mt19937_64 rng(62);
  for (std::int64_t q : {2, 3})
    for (int n = 1; n <= 3; ++n)
      for (std::int64_t m : {2, 3, 5}) {
        if (m % q == 0) continue;
        auto r = gersten_check(laurent_field(q, 6), n, m, 10, rng);
        for (const auto& s : r.samples) EXPECT_TRUE(s.pass()) << q << " " << n << " " << m << ": " << s.input << " " << s.detail;
      }
}

TEST(Gersten, ZeroModM) {
  const FiniteField& k = FiniteField::of_order(7);
  EXPECT_TRUE(zero_mod_m(MilnorClass<FqElem>::integer(6), 3));
  EXPECT_FALSE(zero_mod_m(MilnorClass<FqElem>::integer(4), 3));
  EXPECT_TRUE(zero_mod_m(MilnorClass<FqElem>::symbol({k.from_exponent(2)}), 2));
  EXPECT_FALSE(zero_mod_m(MilnorClass<FqElem>::symbol({k.from_exponent(1)}), 2));
  // gcd(5, 6) = 1: every unit of F_7 is a fifth power.
  EXPECT_TRUE(zero_mod_m(MilnorClass<FqElem>::symbol({k.from_exponent(1)}), 5));
}
