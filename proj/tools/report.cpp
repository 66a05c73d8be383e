#include "report.hpp"

#include "milnor/config.hpp"
#include "milnor/error.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <regex>
#include <sstream>

namespace forge {

using milnor::ErrorCode;
using milnor::fail;

void apply_env_bounds() {
  if (const char* env = std::getenv("MILNOR_FORGE_BOUNDS")) milnor::apply_bounds_spec(milnor::bounds(), env);
}

std::string FieldSpec::name() const {
  const std::string q_str = std::to_string(q);
  switch (model) {
    case Model::Padic:
      return "Q_" + q_str + "@" + std::to_string(precision);
    case Model::Laurent:
      return "F_" + q_str + "((t))@" + std::to_string(precision);
    case Model::Finite:
      return "F_" + q_str;
    case Model::FunctionField:
      return "F_" + q_str + "(t)";
  }
  return "";
}

FieldSpec parse_field(const std::string& text, int default_precision) {
  static const std::regex re(R"(^\s*(Q|F)_(\d+)(\(\(t\)\)|\(t\))?(?:@(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) fail(ErrorCode::ParseError, "unknown field '" + text + "' (use Q_p, F_q, F_q(t), F_q((t)))");
  FieldSpec f;
  f.q = std::stoll(m[2]);
  f.precision = m[4].matched ? std::stoi(m[4]) : default_precision;
  if (f.precision < 1) fail(ErrorCode::InvalidArgument, "precision must be positive");
  if (m[1] == "Q") {
    if (m[3].matched) fail(ErrorCode::ParseError, "Q_p takes no variable");
    f.model = Model::Padic;
  } else if (!m[3].matched) {
    f.model = Model::Finite;
  } else {
    f.model = m[3] == "((t))" ? Model::Laurent : Model::FunctionField;
  }
  // Validates q (prime or prime power).
  if (f.model == Model::Padic) {
    if (!milnor::is_prime(f.q)) fail(ErrorCode::NotPrime, "Q_p needs a prime p");
  } else {
    (void)milnor::FiniteField::of_order(f.q);
  }
  return f;
}

FieldSpec RunConfig::field(Model fallback_model, std::int64_t fallback_q) const {
  if (field_text) return parse_field(*field_text, precision);
  FieldSpec f;
  f.model = fallback_model;
  f.q = fallback_q;
  f.precision = precision;
  return f;
}

bool Report::ok() const {
  if (error) return false;
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string to_record(const Report& r, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["seed"] = cfg.seed;
  j["field"] = r.field;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  j["outputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.outputs) j["outputs"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["ok"] = c.ok;
    if (!c.ok) cj["counterexample"] = c.counterexample;
    j["checks"].push_back(cj);
  }
  if (r.error) j["error"] = *r.error;
  j["ok"] = r.ok();
  return j.dump();
}

std::string to_text(const Report& r, const RunConfig& cfg) {
  std::ostringstream os;
  auto row = [&](const std::string& a, const std::string& b) { os << std::left << std::setw(12) << a << b << "\n"; };
  row("command", r.command);
  if (!r.field.empty()) row("field", r.field);
  row("seed", std::to_string(cfg.seed));
  for (const auto& [k, v] : r.inputs) row("input", k + " = " + v);
  for (const auto& [k, v] : r.outputs) row("output", k + " = " + v);
  if (!r.checks.empty()) {
    // Group "module.op#i" checks by property.
    std::vector<std::string> order;
    std::map<std::string, std::pair<int, int>> tally;
    for (const auto& c : r.checks) {
      const std::string key = c.name.substr(0, c.name.find('#'));
      if (!tally.count(key)) order.push_back(key);
      auto& t = tally[key];
      t.first += c.ok;
      t.second += 1;
    }
    os << "\n" << std::left << std::setw(44) << "property" << std::setw(10) << "passed" << "status\n";
    for (const auto& key : order) {
      const auto [pass, total] = tally[key];
      os << std::left << std::setw(44) << key << std::setw(10) << (std::to_string(pass) + "/" + std::to_string(total))
         << (pass == total ? "PASS" : "FAIL") << "\n";
    }
    for (const auto& c : r.checks)
      if (!c.ok) os << "FAIL " << c.name << ": " << c.counterexample << "\n";
  }
  if (r.error) row("error", *r.error);
  std::ostringstream t;
  t << std::fixed << std::setprecision(3) << r.seconds << " s";
  row("result", std::string(r.ok() ? "PASS" : "FAIL") + "  (" + t.str() + ")");
  return os.str();
}

void emit(const Report& r, const RunConfig& cfg, std::ostream& console) {
  const std::string text = cfg.records ? to_record(r, cfg) + "\n" : to_text(r, cfg);
  console << text;
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::app);
    if (!f) fail(ErrorCode::InvalidArgument, "cannot open " + cfg.out);
    f << text;
  }
}

}  // namespace forge
