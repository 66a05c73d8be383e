#include "milnor/error.hpp"
#include "milnor/parse.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace milnor;

TEST(Parse, FqPolyAndRatRoundTrip) {
  std::mt19937_64 rng(71);
  for (std::int64_t q : {2, 3, 9, 16}) {
    const FiniteField& k = FiniteField::of_order(q);
    for (int it = 0; it < 30; ++it) {
      FqPoly f = random_poly(k, static_cast<int>(rng() % 5), rng, false);
      if (f.is_zero()) continue;
      EXPECT_EQ(parse_fqpoly(f.str(), k), f) << f.str();
      FqPoly d = random_poly(k, 1 + static_cast<int>(rng() % 3), rng, true);
      FqRat r(f, d);
      EXPECT_EQ(parse_fqrat(r.str(), k), r) << r.str();
    }
  }
  const FiniteField& k5 = FiniteField::of_order(5);
  EXPECT_EQ(parse_fqpoly("2*t^3 - t + 4", k5), FqPoly(k5.zero(), {k5.from_int(4), k5.from_int(4), k5.zero(), k5.from_int(2)}));
  EXPECT_EQ(parse_fqrat("(t+1)/(t+2)", k5), FqRat(parse_fqpoly("t + 1", k5), parse_fqpoly("t + 2", k5)));
  EXPECT_THROW(parse_fqpoly("2*t^", k5), Error);
  EXPECT_THROW(parse_fqpoly("(t+1", k5), Error);
  EXPECT_THROW(parse_fqrat("t/t/t", k5), Error);
}

TEST(Parse, RatPolyExtAndClasses) {
  const FiniteField& k3 = FiniteField::of_order(3);
  auto pi = parse_rat_poly("X^2 - t", k3);
  EXPECT_EQ(pi.str("X"), "X^2 + (2*t)");
  EXPECT_EQ(parse_rat_poly(pi.str("X"), k3), pi);
  auto E = simple_extension(pi);
  auto x = parse_ext("[X + (2*t^2 + t + 2)]", E);
  EXPECT_EQ(parse_ext(x.str(), E), x);
  auto a = MilnorClass<FqRat>::symbol({parse_fqrat("t", k3), parse_fqrat("(t+1)/(t^2+1)", k3)}).scaled(2);
  auto b = parse_milnor<FqRat>(a.str(), [&](std::string_view s) { return parse_fqrat(s, k3); });
  EXPECT_EQ(a, b) << a.str();
  auto v = residue_vector(a);
  EXPECT_EQ(parse_residue_vector(v.str(), k3), v) << v.str();
  EXPECT_EQ(parse_residue_vector("t -> 2; inf -> 2", k3).str(), "{inf -> [2], t -> [2]}");
  EXPECT_THROW(parse_place("t^2 + 2", k3), Error);
}

TEST(Parse, MultivariateOverLocalRing) {
  const auto A = padic_field(5, 6);
  auto f = parse_mpoly("3*t1^2*t2 + 5 - t2", 2, A);
  EXPECT_EQ(f.coeff({2, 1}).lift(), 3);
  EXPECT_EQ(f.coeff({0, 0}).lift(), 5);
  EXPECT_TRUE(f.coeff({0, 1}).congruent(A.from_int(-1), 6));
  EXPECT_TRUE(parse_mpoly(f.str(), 2, A).equivalent(f)) << f.str();
  auto x = parse_ring_elem("(6*t + 1)/(t + 7)", 1, A);
  EXPECT_EQ(residue_map(x).str(), "(t + 1)/(t + 2)");
  auto pi = parse_local_poly("X^2 + 1", padic_field(3, 5));
  EXPECT_EQ(pi.degree(), 2);
  EXPECT_THROW(parse_mpoly("3*t3", 2, A), Error);
}
