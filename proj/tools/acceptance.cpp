// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include "report.hpp"
#include "samplers.hpp"
#include "suites.hpp"

#include "milnor/bass_tate.hpp"
#include "milnor/certificate.hpp"
#include "milnor/config.hpp"
#include "milnor/ff_kgroup.hpp"
#include "milnor/gersten.hpp"
#include "milnor/rational_ring.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

using namespace milnor;

namespace {

struct Tally {
  int passed = 0;
  int total = 0;
  std::string first_failure;

  void add(bool ok, const std::string& what) {
    ++total;
    passed += ok;
    if (!ok && first_failure.empty()) first_failure = what;
  }
  // Exceptions count as failures of the sample that raised them.
  void guard(const std::string& what, const std::function<bool()>& fn) {
    try {
      add(fn(), what);
    } catch (const Error& e) {
      add(false, what + ": " + e.what());
    }
  }
  bool ok() const { return total > 0 && passed == total; }
  std::string summary() const {
    std::string s = std::to_string(passed) + "/" + std::to_string(total);
    if (!first_failure.empty()) s += "; first failure " + first_failure;
    return s;
  }
};

// ---------------------------------------------------------------------------

Tally criterion_ff_kgroups() {
  Tally t;
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16})
    for (int n = 1; n <= 3; ++n) {
      const std::string where = "q=" + std::to_string(q) + " n=" + std::to_string(n);
      t.guard(where, [&] {
        const IntVector inv = ff_kgroup(q, n).invariant_factors();
        if (n >= 2) return inv.empty();
        return q == 2 ? inv.empty() : inv == IntVector{BigInt(q - 1)};
      });
    }
  return t;
}

Tally criterion_hilbert() {
  forge::RunConfig cfg;
  forge::Report rep;
  bounds().oracle_precision = 8;
  forge::suite_hilbert_table(cfg, rep);
  Tally t;
  for (const auto& c : rep.checks) t.add(c.ok, c.name + " " + c.counterexample);
  return t;
}

Tally criterion_mod_m(std::mt19937_64& rng) {
  Tally t;
  const std::pair<std::int64_t, std::int64_t> pairs[] = {{5, 3}, {5, 2}, {2, 7}, {3, 4}};
  for (const auto& [p, m] : pairs) {
    const auto F = padic_field(p, 8);
    for (int i = 0; i < 100; ++i) {
      const int deg = 1 + i % 3;
      const auto a = forge::random_unit_symbol(F, deg, rng);
      const auto b = detail::random_residue_class(F.residue_field(), deg, rng);
      const std::string where = "p=" + std::to_string(p) + " m=" + std::to_string(m);
      t.guard(where + " reduce(lift " + b.str() + ")", [&] { return reduce_mod_m(lift_mod_m(b, m, F), m, F) == b; });
      t.guard(where + " lift(reduce " + a.str() + ")", [&] {
        const auto diff = a - lift_mod_m(reduce_mod_m(a, m, F), m, F);
        if (diff.is_zero()) return true;
        const auto cert = build_certificate(diff, m, F);
        return cert.divisor == m && cert.target == diff && verify_certificate(cert).ok;
      });
    }
  }
  return t;
}

template <class T>
void witness_cases(const LocalField<T>& F, std::mt19937_64& rng, Tally& t) {
  for (std::int64_t ell : forge::primes_other_than(F.residue_char(), 3))
    for (int deg : {2, 3})
      for (int i = 0; i < 50; ++i) {
        const auto a = forge::random_unit_symbol(F, deg, rng);
        t.guard(F.name() + " ell=" + std::to_string(ell) + " " + a.str(), [&] {
          const auto cert = divisibility_witness(a, ell, F);
          return cert.divisor == ell && verify_certificate(cert).ok;
        });
      }
}

Tally criterion_witnesses(std::mt19937_64& rng) {
  Tally t;
  witness_cases(padic_field(5, 8), rng, t);
  witness_cases(padic_field(2, 8), rng, t);
  witness_cases(laurent_field(3, 8), rng, t);
  return t;
}

// ---------------------------------------------------------------------------

Poly<FqRat> random_rat_poly(std::mt19937_64& rng, const FiniteField& k, int deg, bool monic) {
  const FqRat zero(FqPoly(k.zero()));
  std::vector<FqRat> c;
  for (int i = 0; i < deg; ++i)
    c.push_back(rng() % 3 == 0 ? zero : FqRat(random_poly(k, static_cast<int>(rng() % 3), rng, false)));
  c.push_back(monic ? zero.one() : forge::random_rat(rng, k, 2));
  return Poly<FqRat>(zero, std::move(c));
}

std::optional<SimpleExtension<FqRat>> random_extension(std::mt19937_64& rng, const FiniteField& k, int deg) {
  for (int tries = 0; tries < 400; ++tries) {
    auto pi = random_rat_poly(rng, k, deg, true);
    if (certify_irreducible(pi)) return simple_extension(pi);
  }
  return std::nullopt;
}

template <class K>
Ext<K> random_ext_unit(std::mt19937_64& rng, const SimpleExtension<K>& E, const std::function<Poly<K>(int)>& poly) {
  while (true) {
    auto g = poly(std::max(0, E.degree() - 1));
    if (!g.is_zero()) return E.element(g);
  }
}

Tally criterion_bass_tate(std::mt19937_64& rng) {
  Tally t;
  for (std::int64_t q : {3, 5}) {
    const FiniteField& k = FiniteField::of_order(q);
    const FqRat one = FqRat::constant(k.one());
    const FqRat t_var(FqPoly::x(k.zero()));
    auto base_poly = [&](int d) { return random_rat_poly(rng, k, d, false); };

    for (int i = 0; i < 100; ++i) {
      const auto a = forge::random_rat_class(rng, k, 2, 3);
      t.guard("reciprocity " + a.str(), [&] { return reciprocity_check(residue_vector(a)); });
      t.guard("section round trip " + a.str(), [&] {
        const ResidueVector v = residue_vector(a);
        if (!residue_vector(bt_section_normalized(v)).equal_on_finite(v)) return false;
        // Shift by multiples of the residues of {t, g} until the infinity entry
        // is trivial; the plain section then applies.
        const ResidueVector tg = residue_vector(FqRatClass::symbol({t_var, FqRat::constant(k.generator())}));
        ResidueVector w = v;
        for (std::int64_t j = 0; j < q - 1 && w.entries.count(Place::infinity()); ++j) w = w - tg;
        if (w.entries.count(Place::infinity())) return false;
        return residue_vector(bt_section(w)).equal_on_finite(w);
      });
    }

    // Norm along X - a is the identity.
    for (int i = 0; i < 100; ++i) {
      const FqRat a = forge::random_rat(rng, k, 2);
      const auto E = simple_extension(Poly<FqRat>(one.zero(), {-a, one}));
      const int deg = 1 + i % 2;
      std::vector<Poly<FqRat>> gs;
      std::vector<FqRat> base;
      bool zero = false;
      for (int j = 0; j < deg; ++j) {
        const auto g = random_rat_poly(rng, k, 2, false);
        zero = zero || g.eval(a).is_zero();
        gs.push_back(g);
      }
      if (zero) {
        --i;
        continue;
      }
      std::vector<Ext<FqRat>> ys;
      for (const auto& g : gs) {
        ys.push_back(E.element(g));
        base.push_back(g.eval(a));
      }
      t.guard("linear norm X - (" + a.str() + ")", [&] {
        return k_equal(norm(MilnorClass<Ext<FqRat>>::symbol(ys), E), FqRatClass::symbol(base), one);
      });
    }

    // Projection formula.
    for (int i = 0; i < 20; ++i) {
      const auto E = random_extension(rng, k, 1 + static_cast<int>(rng() % 2));
      if (!E) continue;
      const auto x = FqRatClass::symbol({forge::random_rat(rng, k, 2)});
      const auto y = MilnorClass<Ext<FqRat>>::symbol({random_ext_unit<FqRat>(rng, *E, base_poly)});
      t.guard("projection pi=" + E->pi.str("X") + " x=" + x.str() + " y=" + y.str(),
              [&] { return projection_formula_check(x, y, *E); });
    }

    // Towers of total degree at most 4.
    int built = 0;
    for (int attempt = 0; attempt < 200 && built < 10; ++attempt) {
      const auto E1 = random_extension(rng, k, 1 + static_cast<int>(rng() % 2));
      if (!E1) continue;
      const int d2 = 1 + static_cast<int>(rng() % 2);
      std::vector<Ext<FqRat>> c;
      for (int i = 0; i < d2; ++i) c.push_back(random_ext_unit<FqRat>(rng, *E1, base_poly));
      c.push_back(E1->embed(one));
      const Poly<Ext<FqRat>> pi2(E1->embed(one.zero()), c);
      std::optional<Tower<FqRat>> T;
      try {
        T = make_tower(E1->pi, pi2);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NotIrreducible || e.code() == ErrorCode::EliminationFailed) continue;
        throw;
      }
      ++built;
      const auto xi = T->upper.element(
          Poly<Ext<FqRat>>(E1->embed(one.zero()), {random_ext_unit<FqRat>(rng, *E1, base_poly), random_ext_unit<FqRat>(rng, *E1, base_poly)}));
      if (xi.is_zero()) continue;
      t.guard("tower " + E1->pi.str("X") + " / " + pi2.str("Y"), [&] { return functoriality_check(*T, xi).ok; });
    }
    t.add(built >= 5, "only " + std::to_string(built) + " towers built over F_" + std::to_string(q) + "(t)");
  }
  return t;
}

// ---------------------------------------------------------------------------

Tally criterion_gersten(std::mt19937_64& rng) {
  Tally t;
  for (std::int64_t q : {2, 3}) {
    const auto F = laurent_field(q, 8);
    for (int n = 1; n <= 3; ++n)
      for (std::int64_t m : {2, 3, 5}) {
        if (m == q) continue;
        const std::string where = F.name() + " n=" + std::to_string(n) + " m=" + std::to_string(m);
        try {
          const auto rep = gersten_check(F, n, m, 50, rng);
          for (const auto& s : rep.samples) t.add(s.pass(), where + " sample " + std::to_string(s.index) + " " + s.input + ": " + s.detail);
        } catch (const Error& e) {
          t.add(false, where + ": " + e.what());
        }
      }
  }
  return t;
}

template <class T>
void ring_checks(const LocalField<T>& A, int count, std::mt19937_64& rng, Tally& t) {
  for (int i = 0; i < count; ++i) {
    const int nv = 1 + i % 2;
    switch (i % 3) {
      case 0: {
        const auto f = random_s_member(A, nv, 2, rng), g = random_s_member(A, nv, 2, rng);
        t.guard("s_member product " + A.name(), [&] { return s_member(f * g); });
        break;
      }
      case 1: {
        const auto x = random_element(A, nv, 2, rng), y = random_element(A, nv, 2, rng);
        t.guard("is_unit locality " + x.str() + " " + y.str(), [&] { return is_unit(x * y) == (is_unit(x) && is_unit(y)); });
        break;
      }
      default: {
        const auto x = random_ring_unit(A, nv, 2, rng), y = random_ring_unit(A, nv, 2, rng);
        t.guard("residue_map " + x.str() + " " + y.str(), [&] {
          bool ok = residue_map(x * y) == residue_map(x) * residue_map(y);
          if (is_unit(x + y)) ok = ok && residue_map(x + y) == residue_map(x) + residue_map(y);
          return ok;
        });
      }
    }
  }
}

template <class T>
Poly<T> random_pi(const LocalField<T>& A, int d, std::mt19937_64& rng) {
  while (true) {
    std::vector<T> c;
    for (int i = 0; i < d; ++i) c.push_back(random_integer(A, rng));
    c.push_back(A.one());
    Poly<T> pi(A.one().zero(), c);
    try {
      BaseChange<T> B(A, pi);
      return pi;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResidueReducible) throw;
    }
  }
}

Tally criterion_rational_ring(std::mt19937_64& rng) {
  Tally t;
  const auto z3 = padic_field(3, 5), z5 = padic_field(5, 4);
  const auto f2 = laurent_field(2, 4);
  ring_checks(z3, 334, rng, t);
  ring_checks(z5, 333, rng, t);
  ring_checks(f2, 333, rng, t);

  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i % 2;
    auto run = [&](const auto& A) {
      const auto pi = random_pi(A, d, rng);
      t.guard("base change " + A.name() + " " + pi.str("X"), [&] {
        const auto r = base_change_roundtrip(A, pi, 3, rng);
        return r.ok;
      });
    };
    if (i % 3 == 0) {
      run(z3);
    } else if (i % 3 == 1) {
      run(z5);
    } else {
      run(f2);
    }
  }

  auto delta_cases = [&](const auto& A) {
    using T = std::decay_t<decltype(A.pi)>;
    using RR = RationalRingElem<T>;
    using C = MilnorClass<RR>;
    for (int i = 0; i < 50; ++i) {
      std::vector<RR> e;
      for (int j = 0; j <= i % 3; ++j) e.push_back(RR::constant(1, random_unit(A, rng)));
      const auto s = C::symbol(e);
      t.guard("delta constant " + s.str(), [&] { return delta_kernel_check(s); });
    }
    for (int i = 0; i < 50; ++i) {
      T u = random_unit(A, rng);
      while (u.residue().is_one()) u = random_unit(A, rng);
      const auto s = C::symbol({RR::variable(1, 0, A.one()), RR::constant(1, u)});
      t.guard("delta {t,u} " + s.str(), [&] { return !delta_kernel_check(s); });
    }
  };
  delta_cases(z3);
  delta_cases(z5);
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 42;
  std::mt19937_64 rng(seed);
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<Tally()> run;
  };
  const Criterion criteria[] = {
      {1, "finite-field K-groups", 60, [] { return criterion_ff_kgroups(); }},
      {2, "Hilbert table vs oracle over Q_2", 120, [] { return criterion_hilbert(); }},
      {3, "mod-m isomorphism with certificates", 300, [&] { return criterion_mod_m(rng); }},
      {4, "divisibility witnesses", 300, [&] { return criterion_witnesses(rng); }},
      {5, "Bass-Tate reciprocity, section, norms", 300, [&] { return criterion_bass_tate(rng); }},
      {6, "Gersten exactness mod m", 300, [&] { return criterion_gersten(rng); }},
      {7, "rational-ring locality", 60, [&] { return criterion_rational_ring(rng); }},
  };
  std::cout << "seed " << seed << "\n";
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.add(false, std::string("aborted: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.ok() && secs <= c.limit;
    all = all && ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c.limit);
    std::cout << "criterion " << c.id << " " << (ok ? "PASS" : "FAIL") << "  " << c.title << ": " << t.summary() << " (" << timing << ")\n";
  }
  return all ? 0 : 1;
}
