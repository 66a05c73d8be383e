#pragma once

#include "milnor/local.hpp"
#include "milnor/parse.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace forge {

/// Applies MILNOR_FORGE_BOUNDS ("maxq=...,maxdeg=...,oracleprec=...") to the library bounds.
void apply_env_bounds();

/// Largest q swept by the FF_KGROUPS suite.
inline constexpr std::int64_t kSuiteMaxQ = 16;

enum class Model { Padic, Laurent, Finite, FunctionField };

struct FieldSpec {
  Model model = Model::Padic;
  std::int64_t q = 5;  // p for Q_p
  int precision = 8;
  std::string name() const;
};

/// "Q_p", "F_q((t))", "F_q", "F_q(t)", optionally suffixed "@N".
FieldSpec parse_field(const std::string& text, int default_precision);

struct RunConfig {
  std::optional<std::string> field_text;
  int precision = 8;
  std::uint64_t seed = 42;
  bool records = false;
  std::string out;
  std::string uniformizer;

  FieldSpec field(Model fallback_model, std::int64_t fallback_q) const;
};

struct Check {
  std::string name;  // module.operation[#sample]
  bool ok = false;
  std::string counterexample;
};

struct Report {
  std::string command;
  std::string field;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;
  std::vector<Check> checks;
  std::optional<std::string> error;
  double seconds = 0;

  void input(std::string k, std::string v) { inputs.emplace_back(std::move(k), std::move(v)); }
  void output(std::string k, std::string v) { outputs.emplace_back(std::move(k), std::move(v)); }
  void check(std::string name, bool ok, std::string counterexample = "") {
    checks.push_back({std::move(name), ok, ok ? std::string() : std::move(counterexample)});
  }
  bool ok() const;
};

/// One JSON object per line; no timing, so reruns are byte-identical.
std::string to_record(const Report& r, const RunConfig& cfg);
std::string to_text(const Report& r, const RunConfig& cfg);
void emit(const Report& r, const RunConfig& cfg, std::ostream& console);

template <class T>
milnor::LocalField<T> make_local(const FieldSpec& f) {
  if constexpr (std::is_same_v<T, milnor::PadicNumber>) {
    return milnor::padic_field(f.q, f.precision);
  } else {
    return milnor::laurent_field(f.q, f.precision);
  }
}

/// Integers, integer fractions, polynomials in t (for F_q((t))), or the full element syntax.
template <class T>
T parse_local_element(std::string_view s, const milnor::LocalField<T>& F) {
  using namespace milnor;
  const std::string x = trim_copy(s);
  if (x.find(':') != std::string::npos) {
    if constexpr (std::is_same_v<T, PadicNumber>) {
      return parse_padic(x);
    } else {
      return parse_laurent(x);
    }
  }
  if constexpr (std::is_same_v<T, PadicNumber>) {
    if (x.find('*') != std::string::npos || x.rfind("O(", 0) == 0)
      return parse_padic("padic(" + std::to_string(F.residue_char()) + "," + std::to_string(F.precision) + "):" + x);
    const auto [n, d] = split_fraction(x);
    auto integer = [&](const std::string& t) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size() || t.empty()) fail(ErrorCode::ParseError, "bad p-adic element '" + x + "'");
      return F.from_int(v);
    };
    return d.empty() ? integer(n) : integer(n) / integer(d);
  } else {
    if (x.rfind("t^", 0) == 0 && x.find("*(") != std::string::npos)
      return parse_laurent("laurent(" + std::to_string(F.residue_order()) + "," + std::to_string(F.precision) + "):" + x);
    const FiniteField& k = F.residue_field();
    auto series = [&](const std::string& text) {
      const FqPoly p = parse_fqpoly(text, k);
      // Powers of t itself, not of a user-chosen uniformizer.
      const T t = F.one().shift(1);
      T r = F.one().zero();
      T pk = F.one();
      for (int i = 0; i <= p.degree(); ++i) {
        if (!p.coeff(i).is_zero()) r = r + F.lift_residue(p.coeff(i)) * pk;
        pk = pk * t;
      }
      return r;
    };
    const auto [n, d] = split_fraction(x);
    return d.empty() ? series(n) : series(n) / series(d);
  }
}

}  // namespace forge
