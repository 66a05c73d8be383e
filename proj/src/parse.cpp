#include "milnor/parse.hpp"

#include <cctype>

namespace milnor {

namespace {

[[noreturn]] void bad(const std::string& what, std::string_view s) {
  fail(ErrorCode::ParseError, what + ": '" + std::string(s) + "'");
}

// Top-level pieces of s separated by `sep`, ignoring separators inside () and [].
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) bad("unbalanced parentheses", s);
    if (depth == 0 && c == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) bad("unbalanced parentheses", s);
  out.emplace_back(s.substr(start));
  return out;
}

}  // namespace

std::string strip_parens(std::string_view s) {
  std::string x = trim_copy(s);
  while (x.size() >= 2 && ((x.front() == '(' && x.back() == ')') || (x.front() == '[' && x.back() == ']'))) {
    // Only strip when the outer pair matches each other.
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      if (x[i] == '(' || x[i] == '[') ++depth;
      if (x[i] == ')' || x[i] == ']') --depth;
      if (depth == 0) {
        outer = false;
        break;
      }
    }
    if (!outer) break;
    x = trim_copy(std::string_view(x).substr(1, x.size() - 2));
  }
  return x;
}

std::pair<std::string, std::string> split_fraction(std::string_view s) {
  const auto parts = split_top(s, '/');
  if (parts.size() == 1) return {strip_parens(parts[0]), ""};
  if (parts.size() != 2) bad("more than one top-level '/'", s);
  return {strip_parens(parts[0]), strip_parens(parts[1])};
}

std::vector<SparseTerm> parse_sparse(std::string_view s, const std::vector<std::string>& vars) {
  const std::string x = strip_parens(s);
  if (x.empty()) bad("empty polynomial", s);
  // Cut at top-level + and -, except a sign right after '^' or at the start.
  std::vector<std::pair<bool, std::string>> pieces;
  int depth = 0;
  bool negative = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const char c = x[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      std::size_t j = i;
      while (j > 0 && x[j - 1] == ' ') --j;
      if (j > 0 && (x[j - 1] == '^' || x[j - 1] == '*')) continue;
      const std::string piece = trim_copy(std::string_view(x).substr(start, i - start));
      if (!piece.empty()) {
        pieces.emplace_back(negative, piece);
      } else if (i != 0 && j != 0) {
        bad("empty term", s);
      }
      negative = c == '-';
      start = i + 1;
    }
  }
  const std::string last = trim_copy(std::string_view(x).substr(start));
  if (last.empty()) bad("dangling sign", s);
  pieces.emplace_back(negative, last);

  std::vector<SparseTerm> out;
  for (const auto& [neg, piece] : pieces) {
    SparseTerm t;
    t.negative = neg;
    t.exponents.assign(vars.size(), 0);
    for (const auto& raw : split_top(piece, '*')) {
      const std::string f = trim_copy(raw);
      if (f.empty()) bad("empty factor", s);
      bool is_var = false;
      for (std::size_t v = 0; v < vars.size() && !is_var; ++v) {
        const std::string& name = vars[v];
        if (f.compare(0, name.size(), name) != 0) continue;
        const std::string rest = f.substr(name.size());
        if (rest.empty()) {
          t.exponents[v] += 1;
          is_var = true;
        } else if (rest[0] == '^') {
          try {
            std::size_t used = 0;
            const int e = std::stoi(rest.substr(1), &used);
            if (used + 1 != rest.size() || e < 0) bad("bad exponent", s);
            t.exponents[v] += e;
            is_var = true;
          } catch (const std::logic_error&) {
            bad("bad exponent", s);
          }
        }
      }
      if (!is_var) t.coeff_factors.push_back(strip_parens(f));
    }
    out.push_back(std::move(t));
  }
  return out;
}

FqPoly parse_fqpoly(std::string_view s, const FiniteField& k, const std::string& var) {
  std::vector<FqElem> c;
  for (const auto& t : parse_sparse(s, {var})) {
    const int e = t.exponents[0];
    if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e + 1), k.zero());
    c[static_cast<std::size_t>(e)] =
        c[static_cast<std::size_t>(e)] + sparse_coeff(t, k.one(), [&](std::string_view x) { return parse_fq_short(k, x); });
  }
  return FqPoly(k.zero(), std::move(c));
}

FqRat parse_fqrat(std::string_view s, const FiniteField& k) {
  const auto [n, d] = split_fraction(s);
  if (d.empty()) return FqRat(parse_fqpoly(n, k));
  return FqRat(parse_fqpoly(n, k), parse_fqpoly(d, k));
}

Poly<FqRat> parse_rat_poly(std::string_view s, const FiniteField& k, const std::string& var) {
  const FqRat zero(FqPoly(k.zero()));
  std::vector<FqRat> c;
  for (const auto& t : parse_sparse(s, {var})) {
    const int e = t.exponents[0];
    if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e + 1), zero);
    c[static_cast<std::size_t>(e)] =
        c[static_cast<std::size_t>(e)] + sparse_coeff(t, zero.one(), [&](std::string_view x) { return parse_fqrat(x, k); });
  }
  return Poly<FqRat>(zero, std::move(c));
}

Ext<FqRat> parse_ext(std::string_view s, const SimpleExtension<FqRat>& E) {
  const FiniteField& k = E.base_one().base().field();
  return E.element(parse_rat_poly(strip_parens(s), k, "X"));
}

Place parse_place(std::string_view s, const FiniteField& k) {
  const std::string x = trim_copy(s);
  if (x == "inf") return Place::infinity();
  const FqPoly P = parse_fqpoly(x, k);
  if (P.degree() < 1 || !P.is_monic() || !is_irreducible(P)) bad("place must be inf or a monic irreducible polynomial", s);
  return Place::finite(P);
}

ResidueVector parse_residue_vector(std::string_view s, const FiniteField& k) {
  ResidueVector v{&k, {}};
  std::string x = trim_copy(s);
  if (x.size() >= 2 && x.front() == '{' && x.back() == '}') x = x.substr(1, x.size() - 2);
  std::vector<std::string> items;
  for (const auto& a : split_top(x, ';'))
    for (const auto& b : split_top(a, ',')) items.push_back(b);
  for (const auto& item : items) {
    if (trim_copy(item).empty()) continue;
    const auto arrow = item.find("->");
    if (arrow == std::string::npos) bad("expected 'place -> value'", item);
    const Place p = parse_place(item.substr(0, arrow), k);
    const FqPoly val = parse_fqpoly(strip_parens(item.substr(arrow + 2)), k);
    const auto F = residue_field_of(k, p);
    const ResidueElem r(F, val);
    if (r.is_zero()) bad("residues must be nonzero", item);
    v.set(p, r);
  }
  return v;
}

}  // namespace milnor
