#include "suites.hpp"

#include "samplers.hpp"

#include "milnor/certificate.hpp"
#include "milnor/config.hpp"
#include "milnor/ff_kgroup.hpp"
#include "milnor/hilbert.hpp"

#include <map>
#include <set>

namespace forge {

using namespace milnor;

namespace {

std::string label(const std::string& op, std::size_t i) { return op + "#" + std::to_string(i); }

template <class T>
void certificate_cases(const LocalField<T>& F, std::int64_t ell, int count, std::mt19937_64& rng, Report& rep,
                       std::size_t& index) {
  for (int i = 0; i < count; ++i, ++index) {
    const auto a = random_unit_symbol(F, 2, rng);
    const std::string where = F.name() + " ell=" + std::to_string(ell) + " " + a.str();
    try {
      const auto cert = divisibility_witness(a, ell, F);
      const auto v = verify_certificate(cert);
      rep.check(label("localk.divisibility_witness", index), v.ok, where + ": " + v.reason);
      const std::string text = certificate_str(cert, F.name());
      const auto back = parse_certificate<T>(text, [](std::string_view s) {
        if constexpr (std::is_same_v<T, PadicNumber>) {
          return parse_padic(s);
        } else {
          return parse_laurent(s);
        }
      });
      rep.check(label("localk.certificate_replay", index), verify_certificate(back).ok && certificate_str(back, F.name()) == text,
                where);
    } catch (const Error& e) {
      rep.check(label("localk.divisibility_witness", index), false, where + ": " + e.what());
    }
  }
}

}  // namespace

void suite_steinberg(const RunConfig& cfg, std::mt19937_64& rng, Report& rep) {
  std::size_t idx = 0;
  // Residues of {f, 1 - f} over F_q(t).
  for (std::int64_t q : {3, 4, 5}) {
    if (q > milnor::bounds().max_field) continue;
    const FiniteField& k = FiniteField::of_order(q);
    for (int i = 0; i < 20; ++i, ++idx) {
      const FqRat f = random_rat(rng, k, milnor::bounds().max_norm_degree);
      if (f == f.one()) continue;
      const auto c = FqRatClass::symbol({f, f.one() - f});
      rep.check(label("bass_tate.residue_vector.steinberg", idx), residue_vector(c).is_zero(), c.str());
    }
  }
  // Tame symbol of {x, 1 - x} over F_q((t)).
  for (std::int64_t q : {2, 3, 4}) {
    if (q > milnor::bounds().max_field) continue;
    const auto F = laurent_field(q, cfg.precision);
    for (int i = 0; i < 20; ++i, ++idx) {
      const LaurentSeries x = random_local_element(F, rng);
      const LaurentSeries y = F.one() - x;
      if (y.is_zero() || y.valuation() >= F.precision) continue;
      const auto c = MilnorClass<LaurentSeries>::symbol({x, y});
      rep.check(label("localk.tame.steinberg", idx), collapse_units(tame(c, F), F.residue_field()).is_one(), c.str());
    }
  }
  // Hilbert pairing of (a, 1 - a) over Q_p.
  for (std::int64_t p : {2, 3, 5}) {
    const auto F = padic_field(p, cfg.precision);
    for (int i = 0; i < 20; ++i, ++idx) {
      const PadicNumber a = random_local_element(F, rng);
      const PadicNumber b = F.one() - a;
      if (b.is_zero() || b.valuation() >= F.precision) continue;
      rep.check(label("localk.hilbert.steinberg", idx), hilbert(a, b).value == 0, "(" + a.str() + ", " + b.str() + ")");
    }
  }
}

void suite_hilbert_table(const RunConfig& cfg, Report& rep) {
  static constexpr std::int64_t kClasses[] = {1, -1, 2, -2, 5, -5, 10, -10};
  const auto F = padic_field(2, std::max(cfg.precision, 8));
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> h;
  std::set<std::int64_t> image;
  int agree = 0;
  std::size_t idx = 0;
  for (std::int64_t a : kClasses)
    for (std::int64_t b : kClasses) {
      const std::int64_t v = hilbert(F.from_int(a), F.from_int(b)).value;
      h[{a, b}] = v;
      image.insert(v);
      const bool solvable = qf_oracle(F.from_int(a), F.from_int(b), milnor::bounds().oracle_precision).solvable;
      agree += solvable == (v == 0);
      rep.check(label("localk.hilbert_vs_qf_oracle", idx++), solvable == (v == 0),
                "(" + std::to_string(a) + ", " + std::to_string(b) + "): hilbert " + std::to_string(v) + ", oracle " +
                    (solvable ? "solvable" : "unsolvable"));
    }
  idx = 0;
  for (std::int64_t a : kClasses)
    for (std::int64_t b : kClasses)
      rep.check(label("localk.hilbert.symmetric", idx++), h[{a, b}] == h[{b, a}],
                "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
  idx = 0;
  for (std::int64_t a : kClasses)
    for (std::int64_t b : kClasses) {
      std::string bad;
      for (std::int64_t c : kClasses)
        if (hilbert(F.from_int(a * b), F.from_int(c)).value != (h[{a, c}] + h[{b, c}]) % 2 && bad.empty())
          bad = "(" + std::to_string(a) + "*" + std::to_string(b) + ", " + std::to_string(c) + ")";
      rep.check(label("localk.hilbert.bilinear", idx++), bad.empty(), bad);
    }
  idx = 0;
  for (std::int64_t a = -12; a <= 12; ++a) {
    if (a == 0 || a == 1) continue;
    rep.check(label("localk.hilbert.steinberg", idx++), hilbert(F.from_int(a), F.from_int(1 - a)).value == 0,
              "(" + std::to_string(a) + ", " + std::to_string(1 - a) + ")");
  }
  rep.check("localk.hilbert.image_size", image.size() == 2, "image has " + std::to_string(image.size()) + " elements");
  rep.output("agreements", std::to_string(agree) + "/64");
}

void suite_reciprocity(const RunConfig&, std::mt19937_64& rng, Report& rep) {
  std::size_t idx = 0;
  for (std::int64_t q : {3, 5}) {
    if (q > milnor::bounds().max_field) continue;
    const FiniteField& k = FiniteField::of_order(q);
    for (int i = 0; i < 50; ++i, ++idx) {
      const auto a = random_rat_class(rng, k, 2, std::min(milnor::bounds().max_norm_degree, 3));
      const ResidueVector v = residue_vector(a);
      rep.check(label("bass_tate.reciprocity_check", idx), reciprocity_check(v), a.str() + " -> " + v.str());
      const auto s = bt_section_normalized(v);
      const ResidueVector back = residue_vector(s);
      rep.check(label("bass_tate.bt_section.round_trip", idx), back == v, v.str() + " -> " + back.str());
      rep.check(label("bass_tate.k2_equal.section", idx), k2_equal(a, s), a.str());
    }
  }
}

void suite_certificates(const RunConfig& cfg, std::mt19937_64& rng, Report& rep) {
  std::size_t idx = 0;
  for (std::int64_t p : {5, 2}) {
    const auto F = padic_field(p, cfg.precision);
    for (std::int64_t ell : primes_other_than(p, 3)) certificate_cases(F, ell, 4, rng, rep, idx);
  }
  if (milnor::bounds().max_field >= 3) {
    const auto F = laurent_field(3, cfg.precision);
    for (std::int64_t ell : primes_other_than(3, 3)) certificate_cases(F, ell, 4, rng, rep, idx);
  }
}

void suite_ff_kgroups(const RunConfig&, Report& rep) {
  const int top = std::min(bounds().max_kgroup_degree, 3);
  for (std::int64_t q : prime_powers_upto(std::min(kSuiteMaxQ, bounds().max_kgroup_q))) {
    std::string row;
    for (int n = 1; n <= top; ++n) {
      const auto G = ff_kgroup(q, n);
      const IntVector inv = G.invariant_factors();
      const std::string shown = vector_str(inv);
      row += (n > 1 ? "  " : "") + std::string("n=") + std::to_string(n) + " " + shown;
      const std::string where = "q=" + std::to_string(q) + " n=" + std::to_string(n) + " invariant factors " + shown;
      if (n == 1) {
        const bool ok = q == 2 ? inv.empty() : inv == IntVector{BigInt(q - 1)};
        rep.check("symbols.ff_kgroup.units", ok, where);
      } else {
        rep.check("symbols.ff_kgroup.vanishing", inv.empty(), where);
      }
    }
    rep.output("q=" + std::to_string(q), row);
  }
}

void run_suite(const std::string& name, const RunConfig& cfg, std::mt19937_64& rng, Report& rep) {
  rep.input("suite", name);
  if (name == "STEINBERG") {
    suite_steinberg(cfg, rng, rep);
  } else if (name == "HILBERT_TABLE") {
    suite_hilbert_table(cfg, rep);
  } else if (name == "RECIPROCITY") {
    suite_reciprocity(cfg, rng, rep);
  } else if (name == "CERTIFICATES") {
    suite_certificates(cfg, rng, rep);
  } else if (name == "FF_KGROUPS") {
    suite_ff_kgroups(cfg, rep);
  } else {
    fail(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
  }
}

}  // namespace forge
