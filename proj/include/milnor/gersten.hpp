#pragma once

#include "milnor/certificate.hpp"
#include "milnor/localk.hpp"

#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

namespace milnor {

struct GerstenSample {
  std::size_t index = 0;
  bool surjective = false;      // del of the section of beta is beta mod m
  bool composite_zero = false;  // del kills the pure-unit class
  std::optional<bool> kernel_pure_unit;  // set when del(alpha) = 0 mod m
  std::string input;
  std::string detail;
  bool pass() const { return surjective && composite_zero && kernel_pure_unit.value_or(true); }
};

struct GerstenReport {
  std::string field;
  int n = 0;
  std::int64_t m = 0;
  std::vector<GerstenSample> samples;
  bool ok() const {
    for (const auto& s : samples)
      if (!s.pass()) return false;
    return true;
  }
  std::size_t kernel_cases() const {
    std::size_t k = 0;
    for (const auto& s : samples) k += s.kernel_pure_unit.has_value();
    return k;
  }
};

/// Vanishing of a class of K^M_d(F_q) in K^M_d(F_q)/m: d = 0 is Z, d = 1 is
/// F_q^x (discrete logs mod gcd(m, q - 1)), and the groups vanish for d >= 2.
inline bool zero_mod_m(const MilnorClass<FqElem>& b, std::int64_t m) {
  if (b.degree() >= 2) return true;
  BigInt s = 0;
  std::int64_t mod = m;
  for (const auto& [e, c] : b.terms()) {
    if (b.degree() == 0) {
      s += c;
    } else {
      const std::int64_t qm1 = e[0].field().order() - 1;
      mod = gcd_i64(m, qm1);
      s += c * e[0].exponent();
    }
  }
  return s % mod == 0;
}

namespace detail {

template <class T>
T random_local_unit(const LocalField<T>& F, std::mt19937_64& rng) {
  const FiniteField& k = F.residue_field();
  T x = F.lift_residue(k.from_exponent(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k.order() - 1))));
  T pk = F.pi;
  for (int i = 1; i < F.precision; ++i) {
    x = x + F.lift_residue(k.from_code(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k.order())))) * pk;
    pk = pk * F.pi;
  }
  return x;
}

inline MilnorClass<FqElem> random_residue_class(const FiniteField& k, int d, std::mt19937_64& rng) {
  if (d == 0) return MilnorClass<FqElem>::integer(1 + static_cast<long>(rng() % 6));
  std::vector<FqElem> e;
  for (int i = 0; i < d; ++i) e.push_back(k.from_exponent(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k.order() - 1))));
  return MilnorClass<FqElem>::symbol(e);
}

}  // namespace detail

/// Sampled mod-m exactness of 0 -> K_n O -> K_n F -> K_{n-1} kappa -> 0 over
/// an equicharacteristic field: the section {pi} . lift hits every sampled
/// kappa-class, del vanishes on unit classes, and a class with del = 0 mod m
/// has a pi-part that is m-divisible (certified), i.e. it is pure-unit mod m.
template <class T>
GerstenReport gersten_check(const LocalField<T>& F, int n, std::int64_t m, int samples, std::mt19937_64& rng) {
  if constexpr (!std::is_same_v<T, LaurentSeries>) {
    fail(ErrorCode::MixedCharRejected, "gersten-check needs an equicharacteristic field F_q((t))");
  } else {
    if (n < 1 || n > 3) fail(ErrorCode::InvalidArgument, "n must be 1, 2 or 3");
    check_modulus(m, F.residue_char());
    if (m < 2) fail(ErrorCode::BadModulus, "m must be at least 2");
    const FiniteField& k = F.residue_field();
    GerstenReport rep{F.name(), n, m, {}};
    const auto pi_class = MilnorClass<T>::symbol({F.pi});
    auto section = [&](const MilnorClass<FqElem>& b) { return product(pi_class, lift_mod_m(b, m, F)); };

    for (int s = 0; s < samples; ++s) {
      GerstenSample smp;
      smp.index = static_cast<std::size_t>(s);

      const auto beta = detail::random_residue_class(k, n - 1, rng);
      smp.surjective = zero_mod_m(tame(section(beta), F) - beta, m);

      std::vector<T> units;
      for (int i = 0; i < n; ++i) units.push_back(detail::random_local_unit(F, rng));
      const auto gamma = MilnorClass<T>::symbol(units).scaled(1 + static_cast<long>(rng() % 3));
      smp.composite_zero = tame(gamma, F).is_zero();

      // alpha: a random class with pi-power entries; odd samples are pushed into ker(del) mod m.
      MilnorClass<T> alpha(n);
      for (int term = 0; term < 2; ++term) {
        std::vector<T> e;
        for (int i = 0; i < n; ++i) {
          const int v = static_cast<int>(rng() % 4) - 1;
          T x = detail::random_local_unit(F, rng);
          for (int j = 0; j < std::abs(v); ++j) x = v > 0 ? x * F.pi : x / F.pi;
          e.push_back(x);
        }
        alpha += MilnorClass<T>::symbol(e);
      }
      if (s % 2) {
        alpha = alpha - section(tame(alpha, F)) + section(detail::random_residue_class(k, n - 1, rng)).scaled(m);
      }
      smp.input = alpha.str();
      const auto d = tame(alpha, F);
      if (zero_mod_m(d, m)) {
        // Strip pi from the pi-terms of the generator form and certify m-divisibility.
        MilnorClass<T> b(n - 1);
        const auto gf = generator_form(alpha, F);
        for (const auto& [e, c] : gf.terms())
          if (matches(e[0], F.pi)) b.add_term(std::vector<T>(e.begin() + 1, e.end()), c);
        bool ok = true;
        if (n == 1) {
          ok = b.is_zero() || b.terms().begin()->second % m == 0;
        } else if (!b.is_zero()) {
          try {
            ok = verify_certificate(build_certificate(b, m, F)).ok;
          } catch (const Error& err) {
            ok = false;
            smp.detail = err.what();
          }
        }
        smp.kernel_pure_unit = ok;
      }
      if (!smp.pass() && smp.detail.empty())
        smp.detail = std::string(smp.surjective ? "" : "section misses beta; ") + (smp.composite_zero ? "" : "del of a unit class is nonzero; ") +
                     (smp.kernel_pure_unit.value_or(true) ? "" : "pi-part is not m-divisible");
      rep.samples.push_back(std::move(smp));
    }
    return rep;
  }
}

}  // namespace milnor
