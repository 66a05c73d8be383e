#pragma once

#include "milnor/error.hpp"
#include "milnor/laurent.hpp"
#include "milnor/padic.hpp"
#include "milnor/numtheory.hpp"
#include "milnor/poly.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <variant>

namespace milnor {

enum class LocalModel { Padic, Laurent };

template <class T>
constexpr LocalModel model_of() {
  return std::is_same_v<T, PadicNumber> ? LocalModel::Padic : LocalModel::Laurent;
}

inline int max_working_precision(const PadicNumber& x) { return PadicNumber::max_precision(x.prime()); }
inline int max_working_precision(const LaurentSeries&) { return 1 << 12; }

/// Naive representative of a residue class: the integer digit in Z_p, the
/// constant series in F_q[[t]].
inline PadicNumber residue_representative(const PadicNumber& like, const FqElem& c, int prec) {
  return PadicNumber::from_int(like.prime(), c.code(), prec);
}
inline LaurentSeries residue_representative(const LaurentSeries&, const FqElem& c, int prec) {
  return LaurentSeries::constant(c, prec);
}

/// A complete discretely valued field at working precision N with a chosen
/// uniformizer (p resp. t unless overridden).
template <class T>
struct LocalField {
  T pi;
  int precision = 8;
  bool standard_uniformizer = true;

  const FiniteField& residue_field() const { return pi.residue_field(); }
  std::int64_t residue_char() const { return residue_field().characteristic(); }
  std::int64_t residue_order() const { return residue_field().order(); }
  T one() const { return pi.one().with_precision(precision); }
  T from_int(std::int64_t n) const { return one().from_int(n); }
  T lift_residue(const FqElem& c) const { return residue_representative(pi, c, precision); }
  std::string name() const;
};

inline LocalField<PadicNumber> padic_field(std::int64_t p, int precision) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return {PadicNumber::from_parts(p, 1, 1, precision), precision, true};
}

inline LocalField<LaurentSeries> laurent_field(std::int64_t q, int precision) {
  const FiniteField& k = FiniteField::of_order(q);
  return {LaurentSeries::constant(k.one(), precision).shift(1), precision, true};
}

/// Replaces the uniformizer; it must have valuation exactly 1.
template <class T>
LocalField<T> with_uniformizer(LocalField<T> F, const T& pi) {
  if (pi.is_zero() || pi.valuation() != 1) fail(ErrorCode::InvalidArgument, "uniformizer must have valuation 1");
  F.pi = pi;
  F.standard_uniformizer = false;
  return F;
}

template <class T>
std::string LocalField<T>::name() const {
  if constexpr (std::is_same_v<T, PadicNumber>) {
    return "Q_" + std::to_string(residue_char()) + "@" + std::to_string(precision);
  } else {
    return "F_" + std::to_string(residue_order()) + "((t))@" + std::to_string(precision);
  }
}

/// x = u * pi^k with v(u) = 0.
template <class T>
std::pair<int, T> unit_decompose(const T& x, const LocalField<T>& F) {
  if (x.is_zero()) fail(ErrorCode::ZeroElement, "unit_decompose of zero");
  const int k = x.valuation();
  if (F.standard_uniformizer) return {k, x.unit_part()};
  return {k, x * F.pi.pow(-k)};
}

/// The (q-1)-th root of unity congruent to x modulo the maximal ideal.
inline PadicNumber teichmuller(const PadicNumber& x) {
  if (!x.is_unit()) fail(ErrorCode::NotAUnit, "teichmuller of a non-unit");
  const std::int64_t p = x.prime();
  PadicNumber w = x;
  for (int i = 0; i <= x.precision() + 1; ++i) {
    PadicNumber next = w.pow(p);
    if (next == w) return w;
    w = next;
  }
  fail(ErrorCode::PrecisionExhausted, "teichmuller iteration did not stabilise");
}

inline LaurentSeries teichmuller(const LaurentSeries& x) {
  if (!x.is_unit()) fail(ErrorCode::NotAUnit, "teichmuller of a non-unit");
  return LaurentSeries::constant(x.coeffs()[0], x.precision());
}

template <class T>
T teichmuller_lift(const FqElem& c, const LocalField<T>& F) {
  if (c.is_zero()) fail(ErrorCode::NotAUnit, "teichmuller lift of zero");
  return teichmuller(F.lift_residue(c));
}

/// Newton lifting of a simple root. Coefficients of f are read as exact
/// representatives; the result is known modulo pi^target.
template <class T>
T hensel_lift(const Poly<T>& f, const T& x0, int target) {
  if (f.degree() < 1) fail(ErrorCode::NewtonConditionFails, "polynomial has no roots to lift");
  const Poly<T> df = f.derivative();
  const T fx0 = f.eval(x0);
  const T dfx0 = df.eval(x0);
  if (fx0.is_exact_zero()) return x0.truncate_absolute(target);
  if (dfx0.is_zero()) fail(ErrorCode::NewtonConditionFails, "derivative vanishes at the starting point");
  const int vd = dfx0.valuation();
  if (fx0.valuation() <= 2 * vd) fail(ErrorCode::NewtonConditionFails, "|f(x0)| < |f'(x0)|^2 fails");
  const int start = fx0.valuation() - vd;
  const int work = target - std::min(0, x0.valuation()) + 2 * std::max(vd, 0) + 2;
  if (work > max_working_precision(x0)) fail(ErrorCode::PrecisionExhausted, "target precision beyond representable range");

  std::vector<T> cs;
  for (const T& c : f.coeffs()) cs.push_back(c.with_precision(work));
  T x = x0.with_precision(work);
  const Poly<T> fw(x.zero(), std::move(cs));
  const Poly<T> dfw = fw.derivative();
  bool converged = false;
  for (int iter = 0; iter < 64; ++iter) {
    const T fx = fw.eval(x);
    if (fx.valuation() >= target + vd) {
      converged = true;
      break;
    }
    x = x - fx / dfw.eval(x);
  }
  if (!converged) fail(ErrorCode::PrecisionExhausted, "Newton iteration did not converge");
  if (fw.eval(x).valuation() < target) fail(ErrorCode::PrecisionExhausted, "lifted root does not re-evaluate to zero");
  if (!x.congruent(x0, std::min({start, x0.absolute_precision(), x.absolute_precision()}))) {
    fail(ErrorCode::PrecisionExhausted, "lifted root drifted from the starting point");
  }
  return x.truncate_absolute(target);
}

/// Root of X^ell - x for x in U_1 with ell prime to the residue characteristic.
template <class T>
T principal_root(const T& x, std::int64_t ell, int target) {
  if (!x.in_principal_units()) fail(ErrorCode::NotAUnit, "principal_root expects a principal unit");
  const T one = x.one();
  std::vector<T> cs(static_cast<std::size_t>(ell) + 1, x.zero());
  cs[0] = -x;
  cs.back() = one;
  return hensel_lift(Poly<T>(x.zero(), std::move(cs)), one, target);
}

using LocalElement = std::variant<PadicNumber, LaurentSeries>;
using LocalFieldCtx = std::variant<LocalField<PadicNumber>, LocalField<LaurentSeries>>;

}  // namespace milnor
