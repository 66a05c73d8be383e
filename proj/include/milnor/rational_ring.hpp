#pragma once

#include "milnor/bass_tate.hpp"
#include "milnor/local.hpp"
#include "milnor/symbols.hpp"

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace milnor {

using Exponent = std::array<int, 2>;

namespace detail {

template <class T>
bool exact_zero(const T& c) {
  if constexpr (Approximate<T>) {
    return c.is_exact_zero();
  } else {
    return c.is_zero();
  }
}

template <class T>
std::string coeff_text(const T& c) {
  if constexpr (requires { c.lift(); }) {
    return c.lift().get_str();
  } else {
    return c.short_str();
  }
}

}  // namespace detail

/// Sparse polynomial in one or two variables. Approximate zero coefficients
/// are kept so that their precision stays visible to the residue map.
template <class T>
class MPoly {
 public:
  using Terms = std::map<Exponent, T>;

  MPoly() = default;
  MPoly(int nvars, const T& like) : nvars_(nvars), like_(like.zero()) {
    if (nvars < 1 || nvars > 2) fail(ErrorCode::InvalidArgument, "only one or two variables are supported");
  }

  static MPoly constant(int nvars, const T& c) { return monomial(nvars, {0, 0}, c); }
  static MPoly monomial(int nvars, Exponent e, const T& c) {
    MPoly f(nvars, c);
    f.add(e, c);
    return f;
  }
  static MPoly variable(int nvars, int i, const T& like) {
    Exponent e{0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(nvars, e, like.one());
  }

  int nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return c_; }
  const T& like() const noexcept { return like_; }

  T coeff(const Exponent& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? like_ : it->second;
  }
  void add(const Exponent& e, const T& c) {
    if (nvars_ == 1 && e[1] != 0) fail(ErrorCode::InvalidArgument, "second exponent in a univariate polynomial");
    auto it = c_.find(e);
    if (it == c_.end()) {
      if (!detail::exact_zero(c)) c_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (detail::exact_zero(it->second)) c_.erase(it);
  }

  bool is_zero() const {
    for (const auto& [e, c] : c_)
      if (!c.is_zero()) return false;
    return true;
  }
  int degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : c_)
      if (!c.is_zero()) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
  }

  MPoly zero() const { return MPoly(nvars_, like_); }
  MPoly one() const { return constant(nvars_, like_.one()); }

  MPoly operator+(const MPoly& o) const {
    check(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.c_) r.add(e, c);
    return r;
  }
  MPoly operator-() const {
    MPoly r = zero();
    for (const auto& [e, c] : c_) r.add(e, -c);
    return r;
  }
  MPoly operator-(const MPoly& o) const { return *this + (-o); }
  MPoly operator*(const MPoly& o) const {
    check(o);
    MPoly r = zero();
    for (const auto& [e1, c1] : c_)
      for (const auto& [e2, c2] : o.c_) r.add({e1[0] + e2[0], e1[1] + e2[1]}, c1 * c2);
    return r;
  }
  MPoly operator*(const T& s) const {
    MPoly r = zero();
    for (const auto& [e, c] : c_) r.add(e, c * s);
    return r;
  }

  /// Equality up to the precision carried by the coefficients.
  bool equivalent(const MPoly& o) const { return (*this - o).is_zero(); }

  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && c_ == o.c_; }
  std::strong_ordering operator<=>(const MPoly& o) const {
    if (auto c = nvars_ <=> o.nvars_; c != 0) return c;
    return c_ <=> o.c_;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    std::vector<std::string> v = names;
    if (v.empty()) v = nvars_ == 1 ? std::vector<std::string>{"t"} : std::vector<std::string>{"t1", "t2"};
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!s.empty()) s += " + ";
      std::string cs = detail::coeff_text(c);
      if (cs.find_first_of(" +-*") != std::string::npos && cs.front() != '-') cs = "(" + cs + ")";
      s += cs;
      for (std::size_t i = 0; i < 2; ++i)
        if (e[i] > 0) s += "*" + v[i] + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check(const MPoly& o) const {
    if (nvars_ != o.nvars_) fail(ErrorCode::ContextMismatch, "polynomials in different numbers of variables");
  }

  int nvars_ = 1;
  T like_{};
  Terms c_;
};

/// Coefficientwise image under f, into a polynomial ring over `like`'s type.
template <class U, class T, class F>
MPoly<U> map_coeffs(const MPoly<T>& p, const U& like, F f) {
  MPoly<U> r(p.nvars(), like);
  for (const auto& [e, c] : p.terms()) r.add(e, f(c));
  return r;
}

/// Reinterpret a univariate polynomial in variable `var` of a bivariate ring.
template <class T>
MPoly<T> embed_variable(const MPoly<T>& p, int var) {
  if (p.nvars() != 1) fail(ErrorCode::InvalidArgument, "expected a univariate polynomial");
  MPoly<T> r(2, p.like());
  for (const auto& [e, c] : p.terms()) {
    Exponent f{0, 0};
    f[static_cast<std::size_t>(var)] = e[0];
    r.add(f, c);
  }
  return r;
}

/// Membership in S: some coefficient is a unit of A.
template <class T>
bool s_member(const MPoly<T>& f) {
  for (const auto& [e, c] : f.terms())
    if (c.is_unit()) return true;
  return false;
}

/// Element of A(t) or A(t1, t2): a fraction whose denominator lies in S.
template <class T>
class RationalRingElem {
 public:
  RationalRingElem() = default;
  RationalRingElem(MPoly<T> num, MPoly<T> den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) fail(ErrorCode::ContextMismatch, "numerator and denominator differ in variables");
    for (const auto* p : {&num_, &den_})
      for (const auto& [e, c] : p->terms())
        if (!c.is_zero() && c.valuation() < 0) fail(ErrorCode::InvalidArgument, "coefficients must be integral");
    if (!s_member(den_)) fail(ErrorCode::NotAUnit, "denominator is not in S");
  }
  explicit RationalRingElem(MPoly<T> num) : RationalRingElem(num, num.one()) {}

  static RationalRingElem constant(int nvars, const T& c) { return RationalRingElem(MPoly<T>::constant(nvars, c)); }
  static RationalRingElem variable(int nvars, int i, const T& like) {
    return RationalRingElem(MPoly<T>::variable(nvars, i, like));
  }

  const MPoly<T>& num() const noexcept { return num_; }
  const MPoly<T>& den() const noexcept { return den_; }
  int nvars() const noexcept { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  RationalRingElem zero() const { return RationalRingElem(num_.zero(), num_.one()); }
  RationalRingElem one() const { return RationalRingElem(num_.one(), num_.one()); }
  RationalRingElem from_int(std::int64_t n) const { return constant(nvars(), num_.like().from_int(n)); }

  RationalRingElem operator+(const RationalRingElem& o) const {
    return RationalRingElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_, Trusted{});
  }
  RationalRingElem operator-() const { return RationalRingElem(-num_, den_, Trusted{}); }
  RationalRingElem operator-(const RationalRingElem& o) const { return *this + (-o); }
  RationalRingElem operator*(const RationalRingElem& o) const {
    return RationalRingElem(num_ * o.num_, den_ * o.den_, Trusted{});
  }
  RationalRingElem inv() const {
    if (!s_member(num_)) fail(ErrorCode::NotAUnit, "element is not a unit of the rational ring");
    return RationalRingElem(den_, num_, Trusted{});
  }
  RationalRingElem operator/(const RationalRingElem& o) const { return *this * o.inv(); }

  /// Equality as fractions: cross-multiplication at working precision.
  bool operator==(const RationalRingElem& o) const { return (num_ * o.den_).equivalent(o.num_ * den_); }
  std::strong_ordering operator<=>(const RationalRingElem& o) const {
    if (auto c = num_ <=> o.num_; c != 0) return c;
    return den_ <=> o.den_;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (den_.equivalent(den_.one())) return "(" + num_.str(names) + ")";
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
  }

 private:
  struct Trusted {};
  RationalRingElem(MPoly<T> num, MPoly<T> den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

  MPoly<T> num_, den_;
};

template <class T>
bool same_context(const RationalRingElem<T>& a, const RationalRingElem<T>& b) {
  return a.nvars() == b.nvars() && same_context(a.num().like(), b.num().like());
}

template <class T>
bool is_unit(const RationalRingElem<T>& x) {
  return s_member(x.num());
}

/// Polynomials over the residue field kappa in one or two variables.
using KPoly = MPoly<FqElem>;

/// Reduced element of kappa(t) or kappa(t1, t2): coprime numerator and
/// denominator, denominator normalized to leading coefficient 1 in the
/// lexicographic monomial order.
class KappaRat {
 public:
  KappaRat(KPoly num, KPoly den);

  const KPoly& num() const noexcept { return num_; }
  const KPoly& den() const noexcept { return den_; }
  int nvars() const noexcept { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  KappaRat operator+(const KappaRat& o) const { return KappaRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  KappaRat operator-() const { return KappaRat(-num_, den_); }
  KappaRat operator-(const KappaRat& o) const { return *this + (-o); }
  KappaRat operator*(const KappaRat& o) const { return KappaRat(num_ * o.num_, den_ * o.den_); }
  KappaRat inv() const;

  bool operator==(const KappaRat& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// The univariate case as an element of F_q(t).
  FqRat univariate() const;
  std::string str() const;

 private:
  KPoly num_, den_;
};

FqPoly to_fqpoly(const KPoly& f);
KPoly from_fqpoly(const FqPoly& f);
/// Substitute t2 := g(t1) in a bivariate polynomial.
FqPoly specialize(const KPoly& f, const FqPoly& g);
/// gcd in F_q[t1, t2] (or F_q[t]), normalized like KappaRat denominators.
KPoly kpoly_gcd(const KPoly& a, const KPoly& b);

template <class T>
FqElem reduce_coefficient(const T& c) {
  if (c.is_zero()) {
    if (c.absolute_precision() < 1) fail(ErrorCode::PrecisionTooLowToReduce, "coefficient has no determined residue");
    return c.residue_field().zero();
  }
  if (c.valuation() < 0) fail(ErrorCode::InvalidArgument, "coefficient is not integral");
  return c.valuation() > 0 ? c.residue_field().zero() : c.residue();
}

template <class T>
KPoly reduce_poly(const MPoly<T>& f) {
  const FqElem zero = f.like().residue_field().zero();
  return map_coeffs(f, zero, [](const T& c) { return reduce_coefficient(c); });
}

/// Coefficientwise reduction A(t1,...,tk) -> kappa(t1,...,tk).
template <class T>
KappaRat residue_map(const RationalRingElem<T>& x) {
  return KappaRat(reduce_poly(x.num()), reduce_poly(x.den()));
}

/// iota_1 (var = 0) or iota_2 (var = 1): A(t) -> A(t1, t2).
template <class T>
RationalRingElem<T> substitute(const RationalRingElem<T>& x, int var) {
  return RationalRingElem<T>(embed_variable(x.num(), var), embed_variable(x.den(), var));
}

struct DeltaOptions {
  int specializations = 16;
};

struct DeltaReport {
  bool vanishes = true;
  bool formal_zero = false;
  int specializations_used = 0;
  std::string witness;  // specialization and image on failure
};

/// Substitutions t2 := g(t1) used by the delta test, skipping g in {0, 1, t1}.
std::vector<FqPoly> specialization_points(const FiniteField& k, std::size_t count);

using KappaTerms = std::vector<std::pair<std::vector<KappaRat>, BigInt>>;

/// Specialize a class over kappa(t1, t2) along t2 := g(t1) at sampled g and
/// test each image for vanishing in K^M_n F_q(t1).
DeltaReport specialized_vanishing(const KappaTerms& terms, int degree, const FiniteField& k, const DeltaOptions& opts);

template <class T>
DeltaReport delta_kernel_report(const MilnorClass<RationalRingElem<T>>& s, const DeltaOptions& opts = {}) {
  DeltaReport rep;
  if (s.is_zero()) {
    rep.formal_zero = true;
    return rep;
  }
  MilnorClass<RationalRingElem<T>> delta(s.degree());
  const FiniteField* k = nullptr;
  for (const auto& [e, c] : s.terms()) {
    std::vector<RationalRingElem<T>> e1, e2;
    for (const auto& x : e) {
      if (x.nvars() != 1) fail(ErrorCode::InvalidArgument, "delta test expects classes over A(t)");
      if (!is_unit(x)) fail(ErrorCode::NonUnitEntry, "entry " + x.str() + " is not a unit of A(t)");
      k = &x.num().like().residue_field();
      e1.push_back(substitute(x, 0));
      e2.push_back(substitute(x, 1));
    }
    delta.add_term(e1, c);
    delta.add_term(e2, -c);
  }
  if (delta.is_zero()) {
    rep.formal_zero = true;
    return rep;
  }
  KappaTerms terms;
  for (const auto& [e, c] : delta.terms()) {
    std::vector<KappaRat> r;
    for (const auto& x : e) r.push_back(residue_map(x));
    terms.emplace_back(std::move(r), c);
  }
  return specialized_vanishing(terms, delta.degree(), *k, opts);
}

/// Sound test for membership in ker(iota_1 - iota_2): false certifies non-membership.
template <class T>
bool delta_kernel_check(const MilnorClass<RationalRingElem<T>>& s, const DeltaOptions& opts = {}) {
  return delta_kernel_report(s, opts).vanishes;
}

/// B = A[X]/(pi) with pi monic and irreducible mod the maximal ideal, and the
/// two presentations of B(t): coefficient vectors over A(t) in the basis
/// 1, X, ..., X^{d-1} (Rep1) and fractions of polynomials in (X, t) reduced
/// mod pi whose denominator has a unit coefficient (Rep2).
template <class T>
class BaseChange {
 public:
  using Rep1 = std::vector<RationalRingElem<T>>;
  struct Rep2 {
    MPoly<T> num, den;
  };

  BaseChange(LocalField<T> A, Poly<T> pi) : A_(std::move(A)), pi_(std::move(pi)) {
    if (pi_.degree() < 1 || !matches(pi_.leading(), pi_.leading().one()))
      fail(ErrorCode::NotMonic, "pi must be monic of positive degree");
    std::vector<FqElem> r;
    for (const auto& c : pi_.coeffs()) r.push_back(reduce_coefficient(c));
    const FqPoly bar(A_.residue_field().zero(), std::move(r));
    if (!is_irreducible(bar)) fail(ErrorCode::ResidueReducible, "pi mod m = " + bar.str("X") + " is reducible");
    d_ = pi_.degree();
    for (int k = 0; k < d_; ++k) {
      std::vector<T> v(static_cast<std::size_t>(d_), A_.one().zero());
      v[static_cast<std::size_t>(k)] = A_.one();
      xpow_.push_back(v);
    }
  }

  int degree() const noexcept { return d_; }
  const LocalField<T>& base() const noexcept { return A_; }
  const Poly<T>& pi() const noexcept { return pi_; }

  /// Reduce a polynomial in (X, t) modulo pi(X).
  MPoly<T> reduce(const MPoly<T>& f) const {
    MPoly<T> r(2, A_.one());
    for (const auto& [e, c] : f.terms()) {
      if (e[0] < d_) {
        r.add(e, c);
        continue;
      }
      const auto& v = xpow(e[0]);
      for (int i = 0; i < d_; ++i) r.add({i, e[1]}, c * v[static_cast<std::size_t>(i)]);
    }
    return r;
  }

  bool valid(const Rep2& y) const { return s_member(reduce(y.den)); }

  Rep2 to_rep2(const Rep1& x) const {
    check1(x);
    MPoly<T> den = MPoly<T>::constant(2, A_.one());
    for (const auto& a : x) den = den * embed_variable(a.den(), 1);
    MPoly<T> num(2, A_.one());
    for (int i = 0; i < d_; ++i) {
      MPoly<T> term = embed_variable(x[static_cast<std::size_t>(i)].num(), 1) * MPoly<T>::monomial(2, {i, 0}, A_.one());
      for (int j = 0; j < d_; ++j)
        if (j != i) term = term * embed_variable(x[static_cast<std::size_t>(j)].den(), 1);
      num = num + term;
    }
    return {reduce(num), reduce(den)};
  }

  Rep1 to_rep1(const Rep2& y) const {
    if (!valid(y)) fail(ErrorCode::NotAUnit, "denominator is not a unit of B(t)");
    const MPoly<T> g = reduce(y.den);
    // Multiplication by g on the basis X^c, as a matrix over A[t].
    std::vector<std::vector<MPoly<T>>> M(static_cast<std::size_t>(d_), std::vector<MPoly<T>>(static_cast<std::size_t>(d_)));
    for (int c = 0; c < d_; ++c) {
      const auto col = x_coords(reduce(g * MPoly<T>::monomial(2, {c, 0}, A_.one())));
      for (int r = 0; r < d_; ++r) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = col[static_cast<std::size_t>(r)];
    }
    std::vector<std::size_t> rows, cols;
    for (int i = 0; i < d_; ++i) {
      rows.push_back(static_cast<std::size_t>(i));
      cols.push_back(static_cast<std::size_t>(i));
    }
    const MPoly<T> N = det(M, rows, cols);
    if (!s_member(N)) fail(ErrorCode::NotAUnit, "norm of the denominator is not in S");
    // g * h = N with h the first adjugate column.
    MPoly<T> h(2, A_.one());
    std::vector<std::size_t> minor_rows(rows.begin() + 1, rows.end());
    for (int r = 0; r < d_; ++r) {
      std::vector<std::size_t> minor_cols;
      for (auto c : cols)
        if (c != static_cast<std::size_t>(r)) minor_cols.push_back(c);
      MPoly<T> cof = det(M, minor_rows, minor_cols);
      if (r % 2) cof = -cof;
      h = h + embed_variable(cof, 1) * MPoly<T>::monomial(2, {r, 0}, A_.one());
    }
    const auto coords = x_coords(reduce(y.num * h));
    Rep1 out;
    for (const auto& a : coords) out.push_back(RationalRingElem<T>(a, N));
    return out;
  }

  Rep1 add(const Rep1& a, const Rep1& b) const {
    Rep1 r;
    for (int i = 0; i < d_; ++i) r.push_back(a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)]);
    return r;
  }
  Rep1 mul(const Rep1& a, const Rep1& b) const {
    const auto zero = RationalRingElem<T>::constant(1, A_.one().zero());
    Rep1 r(static_cast<std::size_t>(d_), zero);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) {
        const auto ab = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        const auto& v = xpow(i + j);
        for (int k = 0; k < d_; ++k)
          if (!v[static_cast<std::size_t>(k)].is_zero())
            r[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(k)] + ab * RationalRingElem<T>::constant(1, v[static_cast<std::size_t>(k)]);
      }
    return r;
  }
  Rep2 add(const Rep2& a, const Rep2& b) const { return {reduce(a.num * b.den + b.num * a.den), reduce(a.den * b.den)}; }
  Rep2 mul(const Rep2& a, const Rep2& b) const { return {reduce(a.num * b.num), reduce(a.den * b.den)}; }

  bool equal(const Rep1& a, const Rep1& b) const {
    for (int i = 0; i < d_; ++i)
      if (!(a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)])) return false;
    return true;
  }
  bool equal(const Rep2& a, const Rep2& b) const { return reduce(a.num * b.den - b.num * a.den).is_zero(); }

  std::string str(const Rep1& x) const {
    std::string s;
    for (int i = 0; i < d_; ++i) {
      if (i) s += " + ";
      s += x[static_cast<std::size_t>(i)].str() + (i ? "*X" + (i > 1 ? "^" + std::to_string(i) : std::string()) : "");
    }
    return s;
  }
  std::string str(const Rep2& y) const {
    return "(" + y.num.str({"X", "t"}) + ")/(" + y.den.str({"X", "t"}) + ")";
  }

 private:
  void check1(const Rep1& x) const {
    if (static_cast<int>(x.size()) != d_) fail(ErrorCode::InvalidArgument, "coefficient vector has the wrong length");
  }

  const std::vector<T>& xpow(int k) const {
    while (static_cast<int>(xpow_.size()) <= k) {
      const auto& prev = xpow_.back();
      std::vector<T> next(static_cast<std::size_t>(d_), A_.one().zero());
      const T top = prev[static_cast<std::size_t>(d_ - 1)];
      for (int i = d_ - 1; i > 0; --i) next[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
      for (int i = 0; i < d_; ++i) next[static_cast<std::size_t>(i)] = next[static_cast<std::size_t>(i)] - top * pi_.coeff(i);
      xpow_.push_back(std::move(next));
    }
    return xpow_[static_cast<std::size_t>(k)];
  }

  /// Coefficients of X^0..X^{d-1} of a reduced polynomial, as polynomials in t.
  std::vector<MPoly<T>> x_coords(const MPoly<T>& f) const {
    std::vector<MPoly<T>> out(static_cast<std::size_t>(d_), MPoly<T>(1, A_.one()));
    for (const auto& [e, c] : f.terms()) out[static_cast<std::size_t>(e[0])].add({e[1], 0}, c);
    return out;
  }

  static MPoly<T> det(const std::vector<std::vector<MPoly<T>>>& M, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
    if (rows.empty()) return MPoly<T>::constant(1, M[0][0].like().one());
    if (rows.size() == 1) return M[rows[0]][cols[0]];
    const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
    MPoly<T> s = M[rows[0]][cols[0]].zero();
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::vector<std::size_t> sub;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (c != j) sub.push_back(cols[c]);
      MPoly<T> t = M[rows[0]][cols[j]] * det(M, rest, sub);
      s = j % 2 ? s - t : s + t;
    }
    return s;
  }

  LocalField<T> A_;
  Poly<T> pi_;
  int d_ = 0;
  mutable std::vector<std::vector<T>> xpow_;
};

// Seeded samplers shared by the property suites.

template <class T>
T random_integer(const LocalField<T>& A, std::mt19937_64& rng) {
  const FiniteField& k = A.residue_field();
  T x = A.one().zero();
  T pk = A.one();
  for (int i = 0; i < A.precision; ++i) {
    x = x + A.lift_residue(k.from_code(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k.order())))) * pk;
    pk = pk * A.pi;
  }
  return x;
}

template <class T>
T random_unit(const LocalField<T>& A, std::mt19937_64& rng) {
  while (true) {
    T x = random_integer(A, rng);
    if (x.is_unit()) return x;
  }
}

template <class T>
MPoly<T> random_mpoly(const LocalField<T>& A, int nvars, int max_deg, std::mt19937_64& rng) {
  MPoly<T> f(nvars, A.one());
  for (int i = 0; i <= max_deg; ++i)
    for (int j = 0; j <= (nvars == 2 ? max_deg - i : 0); ++j)
      if (rng() % 2) f.add({i, j}, random_integer(A, rng));
  return f;
}

template <class T>
MPoly<T> random_s_member(const LocalField<T>& A, int nvars, int max_deg, std::mt19937_64& rng) {
  MPoly<T> f = random_mpoly(A, nvars, max_deg, rng);
  const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
  f.add({i, nvars == 2 ? static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg - i + 1)) : 0}, random_unit(A, rng));
  if (!s_member(f)) f.add({0, 0}, A.one());
  return f;
}

template <class T>
RationalRingElem<T> random_element(const LocalField<T>& A, int nvars, int max_deg, std::mt19937_64& rng) {
  return RationalRingElem<T>(random_mpoly(A, nvars, max_deg, rng), random_s_member(A, nvars, max_deg, rng));
}

template <class T>
RationalRingElem<T> random_ring_unit(const LocalField<T>& A, int nvars, int max_deg, std::mt19937_64& rng) {
  return RationalRingElem<T>(random_s_member(A, nvars, max_deg, rng), random_s_member(A, nvars, max_deg, rng));
}

struct BaseChangeReport {
  bool ok = true;
  int samples = 0;
  int failures = 0;
  std::string first_failure;
};

/// Sampled round trips Rep1 -> Rep2 -> Rep1 and Rep2 -> Rep1 -> Rep2, and
/// compatibility of both conversions with sums and products.
template <class T>
BaseChangeReport base_change_roundtrip(const LocalField<T>& A, const Poly<T>& pi, int samples, std::mt19937_64& rng) {
  const BaseChange<T> B(A, pi);
  const int d = B.degree();
  auto rand1 = [&] {
    typename BaseChange<T>::Rep1 x;
    for (int i = 0; i < d; ++i) x.push_back(random_element(A, 1, 2, rng));
    return x;
  };
  auto rand2 = [&] {
    auto f = [&](bool unit) {
      MPoly<T> p(2, A.one());
      for (int i = 0; i < d; ++i)
        for (int j = 0; j <= 2; ++j)
          if (rng() % 2) p.add({i, j}, random_integer(A, rng));
      if (unit) p.add({static_cast<int>(rng() % static_cast<std::uint64_t>(d)), static_cast<int>(rng() % 3)}, random_unit(A, rng));
      return p;
    };
    typename BaseChange<T>::Rep2 y{f(false), f(true)};
    while (!B.valid(y)) y.den.add({0, 0}, A.one());
    return y;
  };
  BaseChangeReport rep;
  auto record = [&](bool ok, const std::string& what) {
    if (ok) return;
    ++rep.failures;
    rep.ok = false;
    if (rep.first_failure.empty()) rep.first_failure = what;
  };
  for (int s = 0; s < samples; ++s) {
    ++rep.samples;
    const auto x = rand1(), x2 = rand1();
    const auto y = rand2(), y2 = rand2();
    record(B.equal(B.to_rep1(B.to_rep2(x)), x), "rep1 round trip at " + B.str(x));
    record(B.equal(B.to_rep2(B.to_rep1(y)), y), "rep2 round trip at " + B.str(y));
    record(B.equal(B.to_rep2(B.add(x, x2)), B.add(B.to_rep2(x), B.to_rep2(x2))), "sum compatibility at " + B.str(x));
    record(B.equal(B.to_rep2(B.mul(x, x2)), B.mul(B.to_rep2(x), B.to_rep2(x2))), "product compatibility at " + B.str(x));
    record(B.equal(B.to_rep1(B.mul(y, y2)), B.mul(B.to_rep1(y), B.to_rep1(y2))), "product compatibility at " + B.str(y));
  }
  return rep;
}

}  // namespace milnor
