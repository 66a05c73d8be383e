#include "milnor/ff_kgroup.hpp"

#include "milnor/config.hpp"
#include "milnor/error.hpp"
#include "milnor/numtheory.hpp"

#include <map>

namespace milnor {

std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> steinberg_relator_values(const FiniteField& k, int n) {
  const std::int64_t m = k.order() - 1;
  std::map<std::int64_t, std::vector<std::int64_t>> level;
  if (n < 2) return {};
  for (std::int64_t i = 1; i <= m - 1; ++i) {
    // g^j = 1 - g^i
    FqElem rest = k.one() - k.from_exponent(i);
    if (rest.is_zero()) continue;
    std::int64_t j = rest.exponent();
    if (j == 0) j = m;  // exponents live in 1..q-1 so that products stay representative
    level.try_emplace(mul_mod(i, j, m), std::vector<std::int64_t>{i, j});
  }
  for (int extra = 2; extra < n; ++extra) {
    std::map<std::int64_t, std::vector<std::int64_t>> next;
    for (const auto& [v, tuple] : level) {
      for (std::int64_t e = 1; e <= m; ++e) {
        auto t = tuple;
        t.push_back(e);
        next.try_emplace(mul_mod(v, e, m), std::move(t));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

FfKGroup ff_kgroup(std::int64_t q, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative degree");
  if (n > bounds().max_kgroup_degree) fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(n) + " above bound");
  if (q > bounds().max_kgroup_q) fail(ErrorCode::FieldTooLarge, "q = " + std::to_string(q) + " above bound");
  const FiniteField& k = FiniteField::of_order(q);
  FfKGroup g;
  g.q = q;
  g.n = n;
  IntMatrix rows;
  if (n >= 1) {
    rows.push_back({big(q - 1)});
    g.relator_exponents.emplace_back();
  }
  if (n >= 2) {
    // Only rows that lower the running gcd change the subgroup; the rest are
    // implied and only inflate the transforms.
    auto values = steinberg_relator_values(k, n);
    g.enumerated = values.size();
    std::int64_t running = q - 1;
    for (const auto& [v, tuple] : values) {
      std::int64_t next = gcd_i64(running, v);
      if (next == running) continue;
      running = next;
      rows.push_back({big(v)});
      g.relator_exponents.push_back(tuple);
    }
  }
  g.presentation = AbGroupPresentation::make(1, std::move(rows));
  return g;
}

BigInt FfKGroup::order() const {
  if (presentation.relations.empty()) return 0;
  return presentation.snf.D[0][0];
}

BigInt FfKGroup::coordinate(const MilnorClass<FqElem>& c) const {
  if (c.degree() != n) fail(ErrorCode::InvalidArgument, "class degree differs from the group degree");
  BigInt total = 0;
  for (const auto& [e, coeff] : c.terms()) {
    BigInt prod = coeff;
    for (const FqElem& x : e) {
      if (x.field().order() != q) fail(ErrorCode::ContextMismatch, "class over a different field");
      prod *= x.exponent();
    }
    total += prod;
  }
  BigInt d = order();
  if (d == 0) return total;
  BigInt r = total % d;
  if (r < 0) r += d;
  return r;
}

}  // namespace milnor
