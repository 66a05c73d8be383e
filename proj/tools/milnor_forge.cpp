#include "report.hpp"
#include "suites.hpp"

#include "milnor/bass_tate.hpp"
#include "milnor/certificate.hpp"
#include "milnor/config.hpp"
#include "milnor/ff_kgroup.hpp"
#include "milnor/gersten.hpp"
#include "milnor/hilbert.hpp"
#include "milnor/parse.hpp"
#include "milnor/rational_ring.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace milnor;
using forge::FieldSpec;
using forge::Model;
using forge::Report;
using forge::RunConfig;

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// ---------------------------------------------------------------------------
// Field dispatch.

template <class T>
LocalField<T> local_field(const FieldSpec& f, const RunConfig& cfg) {
  auto F = forge::make_local<T>(f);
  if (!cfg.uniformizer.empty()) F = with_uniformizer(F, forge::parse_local_element(cfg.uniformizer, F));
  return F;
}

/// Calls fn with a LocalField<PadicNumber> or LocalField<LaurentSeries>.
template <class Fn>
void with_local(const RunConfig& cfg, Report& rep, Model fallback, std::int64_t fallback_q, Fn fn) {
  const FieldSpec f = cfg.field(fallback, fallback_q);
  if (f.model == Model::Padic) {
    const auto F = local_field<PadicNumber>(f, cfg);
    rep.field = F.name();
    fn(F);
  } else if (f.model == Model::Laurent) {
    const auto F = local_field<LaurentSeries>(f, cfg);
    rep.field = F.name();
    fn(F);
  } else {
    fail(ErrorCode::InvalidArgument, rep.command + " needs a local field Q_p or F_q((t))");
  }
}

const FiniteField& function_field(const RunConfig& cfg, Report& rep) {
  const FieldSpec f = cfg.field(Model::FunctionField, 3);
  if (f.model != Model::FunctionField) fail(ErrorCode::InvalidArgument, rep.command + " needs a rational function field F_q(t)");
  rep.field = f.name();
  return FiniteField::of_order(f.q);
}

template <class T>
MilnorClass<T> parse_local_class(const std::string& s, const LocalField<T>& F) {
  return parse_milnor<T>(s, [&](std::string_view x) { return forge::parse_local_element(x, F); });
}

MilnorClass<FqElem> parse_fq_class(const std::string& s, const FiniteField& k) {
  return parse_milnor<FqElem>(s, [&](std::string_view x) { return parse_fq_short(k, x); });
}

FqRatClass parse_rat_class(const std::string& s, const FiniteField& k) {
  return parse_milnor<FqRat>(s, [&](std::string_view x) { return parse_fqrat(x, k); });
}

MilnorClass<Ext<FqRat>> parse_ext_class(const std::string& s, const SimpleExtension<FqRat>& E) {
  return parse_milnor<Ext<FqRat>>(s, [&](std::string_view x) { return parse_ext(x, E); });
}

int detect_vars(const std::string& s) { return s.find("t1") != std::string::npos || s.find("t2") != std::string::npos ? 2 : 1; }

std::vector<std::string> var_names(int nvars) {
  return nvars == 1 ? std::vector<std::string>{"t"} : std::vector<std::string>{"t1", "t2"};
}

template <class T>
std::string local_entry(const T& x) {
  return x.str();
}

// ---------------------------------------------------------------------------
// Verbs. Each fills the report; failed properties become checks.

struct Args {
  std::int64_t q = 3, ell = 0, m = 0;
  int n = 2, k = 0, samples = 0, specializations = 16;
  bool normalized = false;
  std::string a, b, c, pi, pi2, cert, suite;
};

void cmd_ff_kgroup(const Args& in, Report& rep) {
  rep.input("q", std::to_string(in.q));
  rep.input("n", std::to_string(in.n));
  const FfKGroup G = ff_kgroup(in.q, in.n);
  rep.field = "F_" + std::to_string(in.q);
  rep.output("invariant_factors", vector_str(G.invariant_factors()));
  rep.output("order", G.order() == 0 ? "infinite" : G.order().get_str());
}

void cmd_tame(const RunConfig& cfg, const Args& in, Report& rep) {
  with_local(cfg, rep, Model::Padic, 5, [&](const auto& F) {
    const auto a = parse_local_class(in.a, F);
    rep.input("class", a.str());
    rep.input("uniformizer", F.pi.str());
    rep.output("tame", tame(a, F).str());
    rep.output("generator_form", generator_form(a, F).str());
  });
}

void cmd_reduce(const RunConfig& cfg, const Args& in, Report& rep) {
  with_local(cfg, rep, Model::Padic, 5, [&](const auto& F) {
    using T = typename std::decay_t<decltype(F.pi)>;
    const auto a = parse_local_class(in.a, F);
    rep.input("class", a.str());
    rep.input("m", std::to_string(in.m));
    const auto r = reduce_mod_m(a, in.m, F);
    rep.output("reduced", r.str());
    const MilnorClass<T> diff = a - lift_mod_m(r, in.m, F);
    if (a.degree() >= 1 && !diff.is_zero()) {
      try {
        const auto cert = build_certificate(diff, in.m, F);
        const auto v = verify_certificate(cert);
        rep.check("localk.lift_reduce.certificate", v.ok, diff.str() + ": " + v.reason);
      } catch (const Error& e) {
        rep.check("localk.lift_reduce.certificate", false, diff.str() + ": " + e.what());
      }
    }
  });
}

void cmd_lift(const RunConfig& cfg, const Args& in, Report& rep) {
  with_local(cfg, rep, Model::Padic, 5, [&](const auto& F) {
    const auto b = parse_fq_class(in.a, F.residue_field());
    rep.input("class", b.str());
    rep.input("m", std::to_string(in.m));
    const auto l = lift_mod_m(b, in.m, F);
    rep.output("lifted", l.str());
    const auto back = reduce_mod_m(l, in.m, F);
    rep.check("localk.reduce_lift.identity", back == b, b.str() + " -> " + back.str());
  });
}

void cmd_divide(const RunConfig& cfg, const Args& in, Report& rep) {
  with_local(cfg, rep, Model::Padic, 5, [&](const auto& F) {
    const auto a = parse_local_class(in.a, F);
    rep.input("class", a.str());
    rep.input("ell", std::to_string(in.ell));
    const auto cert = divisibility_witness(a, in.ell, F);
    rep.output("witness", cert.witness.str());
    rep.output("steps", std::to_string(cert.steps.size()));
    const std::string text = certificate_str(cert, F.name());
    if (in.cert.empty()) {
      rep.output("certificate", text);
    } else {
      std::ofstream f(in.cert);
      if (!f) fail(ErrorCode::InvalidArgument, "cannot write " + in.cert);
      f << text;
      rep.output("certificate_path", in.cert);
    }
    const auto v = verify_certificate(cert);
    rep.check("localk.verify_certificate", v.ok, v.reason);
  });
}

void cmd_verify_cert(const Args& in, Report& rep) {
  rep.input("file", in.cert);
  const std::string text = read_file(in.cert);
  std::string field;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    if (line.rfind("field\t", 0) == 0) field = line.substr(6);
  if (field.empty()) fail(ErrorCode::ParseError, "certificate has no field line");
  rep.field = field;
  auto run = [&](auto parse_entry) {
    using E = std::decay_t<decltype(parse_entry(std::string_view{}))>;
    const auto cert = parse_certificate<E>(text, parse_entry);
    rep.output("divisor", std::to_string(cert.divisor));
    rep.output("target", cert.target.str());
    rep.output("witness", cert.witness.str());
    rep.output("steps", std::to_string(cert.steps.size()));
    const auto v = verify_certificate(cert);
    const std::string where =
        v.failing_step ? "step " + std::to_string(*v.failing_step) + ": " + v.reason : "final sum: " + v.reason;
    rep.check("localk.verify_certificate", v.ok, where);
  };
  const FieldSpec f = forge::parse_field(field, 8);
  if (f.model == Model::Padic) {
    run([](std::string_view s) { return parse_padic(s); });
  } else if (f.model == Model::Laurent) {
    run([](std::string_view s) { return parse_laurent(s); });
  } else {
    fail(ErrorCode::ParseError, "certificate field must be Q_p or F_q((t))");
  }
}

LocalField<PadicNumber> padic_only(const RunConfig& cfg, Report& rep) {
  const FieldSpec f = cfg.field(Model::Padic, 2);
  if (f.model != Model::Padic) fail(ErrorCode::InvalidArgument, rep.command + " needs Q_p");
  const auto F = local_field<PadicNumber>(f, cfg);
  rep.field = F.name();
  return F;
}

void cmd_hilbert(const RunConfig& cfg, const Args& in, Report& rep) {
  const auto F = padic_only(cfg, rep);
  const PadicNumber a = forge::parse_local_element(in.a, F), b = forge::parse_local_element(in.b, F);
  rep.input("a", a.str());
  rep.input("b", b.str());
  const HilbertValue h = hilbert(a, b);
  rep.output("value", std::to_string(h.value));
  if (h.tame_residue) rep.output("tame_residue", h.tame_residue->str());
  if (h.p == 2) {
    const bool solvable = qf_oracle(a, b, bounds().oracle_precision).solvable;
    rep.check("localk.hilbert_vs_qf_oracle", solvable == (h.value == 0),
              "hilbert " + std::to_string(h.value) + ", oracle " + (solvable ? "solvable" : "unsolvable"));
  } else {
    rep.check("localk.hilbert.killed_by_p", h.killed_by_p, h.tame_residue ? h.tame_residue->str() : "");
  }
}

void cmd_qf_oracle(const RunConfig& cfg, const Args& in, Report& rep) {
  const auto F = padic_only(cfg, rep);
  const PadicNumber a = forge::parse_local_element(in.a, F), b = forge::parse_local_element(in.b, F);
  const int k = in.k > 0 ? in.k : default_search_precision(F.residue_char());
  rep.input("a", a.str());
  rep.input("b", b.str());
  rep.input("k", std::to_string(k));
  const QfResult r = qf_oracle(a, b, k);
  rep.output("solvable", yes_no(r.solvable));
  rep.output("candidates", std::to_string(r.candidates));
  if (r.solvable) {
    rep.output("approx", "(" + std::to_string(r.approx[0]) + ", " + std::to_string(r.approx[1]) + ", " + std::to_string(r.approx[2]) + ")");
    rep.output("lifted", "(" + r.lifted[0].str() + ", " + r.lifted[1].str() + ", " + r.lifted[2].str() + ")");
    rep.output("verified_precision", std::to_string(r.verified_precision));
  }
}

void cmd_residues(const RunConfig& cfg, const Args& in, Report& rep) {
  const FiniteField& k = function_field(cfg, rep);
  const auto a = parse_rat_class(in.a, k);
  rep.input("class", a.str());
  const ResidueVector v = residue_vector(a);
  rep.output("residues", v.str());
  rep.check("bass_tate.reciprocity_check", reciprocity_check(v), v.str());
}

void cmd_section(const RunConfig& cfg, const Args& in, Report& rep) {
  const FiniteField& k = function_field(cfg, rep);
  const ResidueVector v = parse_residue_vector(in.a, k);
  rep.input("residues", v.str());
  rep.input("normalized", yes_no(in.normalized));
  const FqRatClass s = in.normalized ? bt_section_normalized(v) : bt_section(v);
  rep.output("class", s.str());
  const ResidueVector back = residue_vector(s);
  const bool ok = in.normalized ? back == v : back.equal_on_finite(v);
  rep.check("bass_tate.bt_section.round_trip", ok, v.str() + " -> " + back.str());
}

void cmd_norm(const RunConfig& cfg, const Args& in, Report& rep) {
  const FiniteField& k = function_field(cfg, rep);
  const auto E = simple_extension(parse_rat_poly(in.pi, k));
  const auto xi = parse_ext_class(in.a, E);
  rep.input("pi", E.pi.str("X"));
  rep.input("class", xi.str());
  const auto N = norm(xi, E);
  rep.output("norm", N.str());
  if (xi.degree() == 1) {
    for (const auto& [e, c] : xi.terms()) {
      const FqRat euclid = norm_euclid(E, e[0]), coprime = norm_element_coprime_base(E, e[0]);
      rep.check("bass_tate.norm.dual_route", euclid == coprime, e[0].str() + ": " + euclid.str() + " vs " + coprime.str());
    }
  } else if (xi.degree() == 2) {
    const ResidueVector v = residue_vector(N);
    rep.check("bass_tate.norm.reciprocity", reciprocity_check(v), v.str());
  }
}

void cmd_check_projection(const RunConfig& cfg, const Args& in, Report& rep) {
  const FiniteField& k = function_field(cfg, rep);
  const auto E = simple_extension(parse_rat_poly(in.pi, k));
  const auto x = parse_rat_class(in.a, k);
  const auto y = parse_ext_class(in.b, E);
  rep.input("pi", E.pi.str("X"));
  rep.input("x", x.str());
  rep.input("y", y.str());
  rep.check("bass_tate.projection_formula_check", projection_formula_check(x, y, E), "x = " + x.str() + ", y = " + y.str());
}

void cmd_check_tower(const RunConfig& cfg, const Args& in, Report& rep) {
  const FiniteField& k = function_field(cfg, rep);
  const auto lower = simple_extension(parse_rat_poly(in.pi, k));
  auto parse_upper = [&](const std::string& s) {
    std::vector<Ext<FqRat>> c;
    const Ext<FqRat> zero = lower.embed(lower.base_one().zero());
    for (const auto& t : parse_sparse(s, {"Y"})) {
      const int e = t.exponents[0];
      if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e + 1), zero);
      c[static_cast<std::size_t>(e)] =
          c[static_cast<std::size_t>(e)] + sparse_coeff(t, zero.one(), [&](std::string_view x) { return parse_ext(x, lower); });
    }
    return Poly<Ext<FqRat>>(zero, std::move(c));
  };
  const auto T = make_tower(lower.pi, parse_upper(in.pi2));
  const auto xi = T.upper.element(parse_upper(in.a));
  rep.input("pi1", lower.pi.str("X"));
  rep.input("pi2", T.upper.pi.str("Y"));
  rep.input("xi", xi.str());
  rep.output("composite", T.composite.pi.str("Z"));
  const TowerCheck r = functoriality_check(T, xi);
  rep.output("stepwise", r.stepwise);
  rep.output("direct", r.direct);
  rep.check("bass_tate.functoriality_check", r.ok, "stepwise " + r.stepwise + " vs direct " + r.direct);
}

void cmd_check_reciprocity(const RunConfig& cfg, const Args& in, Report& rep) {
  const FiniteField& k = function_field(cfg, rep);
  ResidueVector v;
  if (trim_copy(in.a).rfind("deg:", 0) == 0) {
    const auto a = parse_rat_class(in.a, k);
    rep.input("class", a.str());
    v = residue_vector(a);
  } else {
    v = parse_residue_vector(in.a, k);
  }
  rep.input("residues", v.str());
  rep.check("bass_tate.reciprocity_check", reciprocity_check(v), v.str());
}

void cmd_s_member(const RunConfig& cfg, const Args& in, Report& rep) {
  with_local(cfg, rep, Model::Padic, 5, [&](const auto& F) {
    const int nv = detect_vars(in.a);
    const auto f = parse_mpoly(in.a, nv, F);
    rep.input("poly", f.str(var_names(nv)));
    rep.output("s_member", yes_no(s_member(f)));
  });
}

void cmd_ratring_unit(const RunConfig& cfg, const Args& in, Report& rep) {
  with_local(cfg, rep, Model::Padic, 5, [&](const auto& F) {
    const int nv = detect_vars(in.a);
    const auto x = parse_ring_elem(in.a, nv, F);
    rep.input("element", x.str(var_names(nv)));
    rep.output("is_unit", yes_no(is_unit(x)));
  });
}

void cmd_ratring_residue(const RunConfig& cfg, const Args& in, Report& rep) {
  with_local(cfg, rep, Model::Padic, 5, [&](const auto& F) {
    const int nv = detect_vars(in.a);
    const auto x = parse_ring_elem(in.a, nv, F);
    rep.input("element", x.str(var_names(nv)));
    rep.output("residue", residue_map(x).str());
  });
}

void cmd_delta_check(const RunConfig& cfg, const Args& in, Report& rep) {
  with_local(cfg, rep, Model::Padic, 5, [&](const auto& F) {
    using T = typename std::decay_t<decltype(F.pi)>;
    const auto s = parse_milnor<RationalRingElem<T>>(in.a, [&](std::string_view x) { return parse_ring_elem(x, 1, F); });
    rep.input("class", s.str());
    rep.input("specializations", std::to_string(in.specializations));
    const DeltaReport d = delta_kernel_report(s, DeltaOptions{in.specializations});
    rep.output("vanishes", yes_no(d.vanishes));
    rep.output("formal_zero", yes_no(d.formal_zero));
    rep.output("specializations_used", std::to_string(d.specializations_used));
    if (!d.witness.empty()) rep.output("witness", d.witness);
  });
}

void cmd_base_change_check(const RunConfig& cfg, const Args& in, std::mt19937_64& rng, Report& rep) {
  with_local(cfg, rep, Model::Padic, 3, [&](const auto& F) {
    const auto pi = parse_local_poly(in.pi, F);
    rep.input("pi", pi.str("X"));
    rep.input("samples", std::to_string(in.samples));
    const BaseChangeReport r = base_change_roundtrip(F, pi, in.samples, rng);
    rep.output("samples", std::to_string(r.samples));
    rep.output("failures", std::to_string(r.failures));
    rep.check("rational_ring.base_change_roundtrip", r.ok, r.first_failure);
  });
}

void cmd_gersten(const RunConfig& cfg, const Args& in, std::mt19937_64& rng, Report& rep) {
  with_local(cfg, rep, Model::Laurent, 3, [&](const auto& F) {
    rep.input("n", std::to_string(in.n));
    rep.input("m", std::to_string(in.m));
    rep.input("samples", std::to_string(in.samples));
    const GerstenReport g = gersten_check(F, in.n, in.m, in.samples, rng);
    rep.output("kernel_cases", std::to_string(g.kernel_cases()));
    for (const auto& s : g.samples)
      rep.check("cli.gersten_check#" + std::to_string(s.index), s.pass(), s.input + ": " + s.detail);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor K-theory computations over finite, local and rational function fields", "milnor-forge"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string field_text, format = "text";
  app.add_option("--field", field_text, "Q_p, F_q((t)), F_q or F_q(t), optionally with @precision");
  app.add_option("--precision", cfg.precision, "working precision for local fields")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--out", cfg.out, "append the report to FILE");
  app.add_option("--uniformizer", cfg.uniformizer, "override the uniformizer of a local field");

  Args in;
  std::function<void(Report&, std::mt19937_64&)> action;
  auto verb = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  verb("ff-kgroup", "invariant factors of K^M_n(F_q)", [&](Report& r, auto&) { cmd_ff_kgroup(in, r); });
  {
    auto* s = app.get_subcommand("ff-kgroup");
    s->add_option("--q", in.q, "field order")->required();
    s->add_option("--n", in.n, "degree")->required();
  }
  verb("tame", "tame symbol and generator form", [&](Report& r, auto&) { cmd_tame(cfg, in, r); })
      ->add_option("class", in.a)->required();
  {
    auto* s = verb("reduce", "reduce a unit class mod m", [&](Report& r, auto&) { cmd_reduce(cfg, in, r); });
    s->add_option("--m", in.m)->required();
    s->add_option("class", in.a)->required();
  }
  {
    auto* s = verb("lift", "Teichmuller lift of a residue class", [&](Report& r, auto&) { cmd_lift(cfg, in, r); });
    s->add_option("--m", in.m)->required();
    s->add_option("class", in.a)->required();
  }
  {
    auto* s = verb("divide", "divisibility certificate for a unit class", [&](Report& r, auto&) { cmd_divide(cfg, in, r); });
    s->add_option("--ell", in.ell)->required();
    s->add_option("--cert", in.cert, "write the certificate to FILE");
    s->add_option("class", in.a)->required();
  }
  verb("verify-cert", "replay a certificate file", [&](Report& r, auto&) { cmd_verify_cert(in, r); })
      ->add_option("file", in.cert)->required();
  {
    auto* s = verb("hilbert", "Hilbert symbol over Q_p", [&](Report& r, auto&) { cmd_hilbert(cfg, in, r); });
    s->add_option("a", in.a)->required();
    s->add_option("b", in.b)->required();
  }
  {
    auto* s = verb("qf-oracle", "solve z^2 = a x^2 + b y^2 over Q_p", [&](Report& r, auto&) { cmd_qf_oracle(cfg, in, r); });
    s->add_option("--k", in.k, "search precision");
    s->add_option("a", in.a)->required();
    s->add_option("b", in.b)->required();
  }
  verb("residues", "residue vector of a K_2 class of F_q(t)", [&](Report& r, auto&) { cmd_residues(cfg, in, r); })
      ->add_option("class", in.a)->required();
  {
    auto* s = verb("section", "class with a prescribed residue vector", [&](Report& r, auto&) { cmd_section(cfg, in, r); });
    s->add_flag("--normalized", in.normalized, "allow a nonzero entry at infinity");
    s->add_option("residues", in.a)->required();
  }
  {
    auto* s = verb("norm", "norm from F_q(t)[X]/(pi)", [&](Report& r, auto&) { cmd_norm(cfg, in, r); });
    s->add_option("--pi", in.pi)->required();
    s->add_option("class", in.a)->required();
  }
  {
    auto* s = verb("check-projection", "projection formula N({x, y}) = {x, N y}",
                   [&](Report& r, auto&) { cmd_check_projection(cfg, in, r); });
    s->add_option("--pi", in.pi)->required();
    s->add_option("x", in.a)->required();
    s->add_option("y", in.b)->required();
  }
  {
    auto* s = verb("check-tower", "norm functoriality in a tower", [&](Report& r, auto&) { cmd_check_tower(cfg, in, r); });
    s->add_option("--pi1", in.pi)->required();
    s->add_option("--pi2", in.pi2, "polynomial in Y with coefficients in F_q(t)[X]/(pi1)")->required();
    s->add_option("element", in.a)->required();
  }
  verb("check-reciprocity", "reciprocity of a residue vector or class",
       [&](Report& r, auto&) { cmd_check_reciprocity(cfg, in, r); })
      ->add_option("input", in.a)->required();
  verb("s-member", "does a polynomial have a unit coefficient", [&](Report& r, auto&) { cmd_s_member(cfg, in, r); })
      ->add_option("poly", in.a)->required();
  verb("ratring-unit", "unit test in A(t)", [&](Report& r, auto&) { cmd_ratring_unit(cfg, in, r); })
      ->add_option("element", in.a)->required();
  verb("ratring-residue", "residue in kappa(t)", [&](Report& r, auto&) { cmd_ratring_residue(cfg, in, r); })
      ->add_option("element", in.a)->required();
  {
    auto* s = verb("delta-check", "sampled delta-kernel test", [&](Report& r, auto&) { cmd_delta_check(cfg, in, r); });
    s->add_option("--specializations", in.specializations)->check(CLI::PositiveNumber);
    s->add_option("class", in.a)->required();
  }
  {
    auto* s = verb("base-change-check", "representation round trips for A(t)[X]/(pi)",
                   [&](Report& r, auto& rng) { cmd_base_change_check(cfg, in, rng, r); });
    s->add_option("--pi", in.pi)->required();
    s->add_option("--samples", in.samples)->default_val(20);
  }
  {
    auto* s = verb("gersten-check", "sampled mod-m exactness over F_q((t))",
                   [&](Report& r, auto& rng) { cmd_gersten(cfg, in, rng, r); });
    s->add_option("--n", in.n)->required();
    s->add_option("--m", in.m)->required();
    s->add_option("--samples", in.samples)->default_val(50);
  }
  verb("suite", "named invariant suite", [&](Report& r, auto& rng) { forge::run_suite(in.suite, cfg, rng, r); })
      ->add_option("name", in.suite)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!field_text.empty()) cfg.field_text = field_text;
  cfg.records = format == "records";

  Report rep;
  for (const CLI::App* s : app.get_subcommands()) rep.command = s->get_name();
  std::mt19937_64 rng(cfg.seed);
  const auto start = std::chrono::steady_clock::now();
  try {
    forge::apply_env_bounds();
    action(rep, rng);
  } catch (const Error& e) {
    rep.error = e.what();
  } catch (const std::exception& e) {
    rep.error = std::string("InvalidArgument: ") + e.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  try {
    forge::emit(rep, cfg, std::cout);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (rep.error) return 2;
  return rep.ok() ? 0 : 1;
}
