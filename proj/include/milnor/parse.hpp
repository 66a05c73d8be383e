#pragma once

#include "milnor/bass_tate.hpp"
#include "milnor/rational_ring.hpp"
#include "milnor/serialize.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace milnor {

/// One term of a sparse polynomial: exponents per variable, the coefficient
/// factors (text, outer parentheses removed), and the sign.
struct SparseTerm {
  std::vector<int> exponents;
  std::vector<std::string> coeff_factors;
  bool negative = false;
};

/// Splits "c*x^a*y^b + ... - ..." at top-level signs. Factors that are not a
/// listed variable (optionally with ^k) are coefficient factors.
std::vector<SparseTerm> parse_sparse(std::string_view s, const std::vector<std::string>& vars);

/// Splits "num/den" at a top-level slash; den is empty when absent.
std::pair<std::string, std::string> split_fraction(std::string_view s);

std::string strip_parens(std::string_view s);

template <class K, class ParseCoeff>
K sparse_coeff(const SparseTerm& t, const K& one, ParseCoeff parse_coeff) {
  K c = one;
  for (const auto& f : t.coeff_factors) c = c * parse_coeff(f);
  return t.negative ? -c : c;
}

FqPoly parse_fqpoly(std::string_view s, const FiniteField& k, const std::string& var = "t");
FqRat parse_fqrat(std::string_view s, const FiniteField& k);
/// Polynomial in X with F_q(t) coefficients, e.g. "X^2 + (2*t)".
Poly<FqRat> parse_rat_poly(std::string_view s, const FiniteField& k, const std::string& var = "X");
/// Element of F_q(t)[X]/(pi), written as a polynomial in X, optionally in brackets.
Ext<FqRat> parse_ext(std::string_view s, const SimpleExtension<FqRat>& E);
/// A place of F_q(t): "inf" or a monic irreducible polynomial in t.
Place parse_place(std::string_view s, const FiniteField& k);
/// "P -> value; ..." (or comma-separated) with values polynomials in t read modulo P (t^{-1} at infinity).
ResidueVector parse_residue_vector(std::string_view s, const FiniteField& k);

/// Element of the integer ring: an integer, or the full element syntax.
template <class T>
T parse_local_coeff(std::string_view s, const LocalField<T>& A) {
  const std::string x = trim_copy(s);
  if (x.find(':') != std::string::npos) {
    if constexpr (std::is_same_v<T, PadicNumber>) {
      return parse_padic(x);
    } else {
      return parse_laurent(x);
    }
  }
  try {
    std::size_t used = 0;
    const long long v = std::stoll(x, &used);
    if (used == x.size()) return A.from_int(v);
  } catch (const std::exception&) {
  }
  fail(ErrorCode::ParseError, "bad coefficient '" + x + "'");
}

/// "c*t1^a*t2^b + ..." (or in t for one variable) with integer coefficients.
template <class T>
MPoly<T> parse_mpoly(std::string_view s, int nvars, const LocalField<T>& A) {
  const std::vector<std::string> vars = nvars == 1 ? std::vector<std::string>{"t"} : std::vector<std::string>{"t1", "t2"};
  MPoly<T> f(nvars, A.one());
  for (const auto& t : parse_sparse(s, vars)) {
    const T c = sparse_coeff(t, A.one(), [&](std::string_view x) { return parse_local_coeff(x, A); });
    f.add({t.exponents[0], nvars == 2 ? t.exponents[1] : 0}, c);
  }
  return f;
}

template <class T>
RationalRingElem<T> parse_ring_elem(std::string_view s, int nvars, const LocalField<T>& A) {
  const auto [n, d] = split_fraction(s);
  if (d.empty()) return RationalRingElem<T>(parse_mpoly(n, nvars, A));
  return RationalRingElem<T>(parse_mpoly(n, nvars, A), parse_mpoly(d, nvars, A));
}

/// Polynomial in X over the integer ring, e.g. "X^2 + 1".
template <class T>
Poly<T> parse_local_poly(std::string_view s, const LocalField<T>& A, const std::string& var = "X") {
  std::vector<T> c;
  for (const auto& t : parse_sparse(s, {var})) {
    const int e = t.exponents[0];
    if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e + 1), A.one().zero());
    c[static_cast<std::size_t>(e)] = c[static_cast<std::size_t>(e)] +
                                     sparse_coeff(t, A.one(), [&](std::string_view x) { return parse_local_coeff(x, A); });
  }
  return Poly<T>(A.one().zero(), std::move(c));
}

}  // namespace milnor
