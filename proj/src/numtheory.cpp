#include "milnor/numtheory.hpp"

#include "milnor/config.hpp"
#include "milnor/error.hpp"

#include <sstream>

namespace milnor {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factor_int(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  if (n < 0) n = -n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::pair<std::int64_t, int> prime_power(std::int64_t n) {
  auto fs = factor_int(n);
  if (fs.size() != 1) return {0, 0};
  return fs.front();
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  base = pmod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = pmod(a, m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) fail(ErrorCode::DivisionByZero, "element is not invertible modulo " + std::to_string(m));
  return pmod(s0, m);
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int valuation_int(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<std::int64_t> primes_excluding(std::int64_t excluded, int count) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; static_cast<int>(out.size()) < count; ++n) {
    if (is_prime(n) && n != excluded) out.push_back(n);
  }
  return out;
}

Bounds& bounds() {
  static Bounds b;
  return b;
}

void apply_bounds_spec(Bounds& b, const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorCode::InvalidArgument, "bounds entry without '=': " + item);
    std::string key = item.substr(0, eq);
    std::int64_t value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "bounds value is not an integer: " + item);
    }
    if (value <= 0) fail(ErrorCode::InvalidArgument, "bounds must be positive: " + item);
    if (key == "maxq") {
      b.max_field = value;
      b.max_kgroup_q = value < b.max_kgroup_q ? value : b.max_kgroup_q;
    } else if (key == "maxdeg") {
      b.max_norm_degree = static_cast<int>(value);
    } else if (key == "oracleprec") {
      b.oracle_precision = static_cast<int>(value);
    } else {
      fail(ErrorCode::InvalidArgument, "unknown bounds key: " + key);
    }
  }
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NewtonConditionFails: return "NewtonConditionFails";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorCode::BadPosition: return "BadPosition";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::PrecisionTooLowToReduce: return "PrecisionTooLowToReduce";
    case ErrorCode::NonUnitEntry: return "NonUnitEntry";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::PiEntryPresent: return "PiEntryPresent";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::ReciprocityFails: return "ReciprocityFails";
    case ErrorCode::InfinityEntryNonzero: return "InfinityEntryNonzero";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::EliminationFailed: return "EliminationFailed";
    case ErrorCode::ResidueReducible: return "ResidueReducible";
    case ErrorCode::TerminationBound: return "TerminationBound";
    case ErrorCode::MixedCharRejected: return "MixedCharRejected";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace milnor
