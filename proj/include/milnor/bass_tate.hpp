#pragma once

#include "milnor/element_traits.hpp"
#include "milnor/extension.hpp"
#include "milnor/ff_kgroup.hpp"
#include "milnor/finite_field.hpp"
#include "milnor/poly_factor.hpp"
#include "milnor/ratfunc.hpp"
#include "milnor/symbols.hpp"
#include "milnor/tame.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace milnor {

using FqRat = RatFunc<FqElem>;
using FqRatClass = MilnorClass<FqRat>;
using ResidueElem = Ext<FqElem>;

/// N_{F'/F} = kNormInfinitySign * d_inf(beta) for the preimage beta of the
/// Bass-Tate sequence; this sign makes the norm along X - a the identity.
inline constexpr int kNormInfinitySign = -1;

/// Bound on descending-degree corrections in bt_section and norm.
inline constexpr int kCorrectionBound = 4096;

template <class R>
R power(R x, BigInt e) {
  if (e < 0) {
    x = x.inv();
    e = -e;
  }
  R r = x.one();
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = r * x;
    x = x * x;
    e >>= 1;
  }
  return r;
}

/// A degree-1 class sum c_i {u_i} as the single unit prod u_i^{c_i}.
template <class R>
R collapse_degree_one(const MilnorClass<R>& c, const R& one) {
  if (c.degree() != 1) fail(ErrorCode::InvalidArgument, "expected a degree-1 class");
  R r = one;
  for (const auto& [e, k] : c.terms()) r = r * power(e[0], k);
  return r;
}

// ---------------------------------------------------------------------------
// Valuations of K(X): the D-adic one for a monic D, and the degree one at infinity.

template <class K>
int strip_factor(Poly<K>& f, const Poly<K>& d) {
  int k = 0;
  while (true) {
    auto [q, r] = f.divmod(d);
    if (!r.is_zero()) return k;
    f = std::move(q);
    ++k;
  }
}

/// Valuation at a monic D (a prime, or a coprime-base element treated formally);
/// residues live in K[X]/(D).
template <class K>
struct PolyPlace {
  using Elem = RatFunc<K>;
  using Residue = Ext<K>;

  Poly<K> D;
  std::shared_ptr<const ExtensionField<K>> field;

  explicit PolyPlace(Poly<K> d, std::string var = "x") : D(std::move(d)), field(Ext<K>::make_field(D, std::move(var))) {}

  int valuation(const Elem& f) const {
    if (f.is_zero()) fail(ErrorCode::ZeroEntry, "symbol entries must be nonzero");
    Poly<K> n = f.num(), d = f.den();
    return strip_factor(n, D) - strip_factor(d, D);
  }
  Residue residue_unit(const Elem& f) const {
    Poly<K> n = f.num(), d = f.den();
    strip_factor(n, D);
    strip_factor(d, D);
    return Ext<K>(field, n) / Ext<K>(field, d);
  }
  Residue minus_one() const { return -Ext<K>::embed(field, D.base().one()); }
};

/// The place at infinity of K(X): uniformizer 1/X, residue field K.
template <class K>
struct InfinityPlace {
  using Elem = RatFunc<K>;
  using Residue = K;

  K base;

  int valuation(const Elem& f) const {
    if (f.is_zero()) fail(ErrorCode::ZeroEntry, "symbol entries must be nonzero");
    return f.den().degree() - f.num().degree();
  }
  Residue residue_unit(const Elem& f) const { return f.num().leading() / f.den().leading(); }
  Residue minus_one() const { return -base.one(); }
};

// ---------------------------------------------------------------------------
// Places of F_q(t) and residue vectors.

struct Place {
  std::optional<FqPoly> poly;  // empty at infinity

  static Place infinity() { return {}; }
  static Place finite(FqPoly p) { return Place{std::move(p)}; }
  bool is_infinity() const noexcept { return !poly.has_value(); }
  int degree() const { return poly ? poly->degree() : 1; }
  std::string str() const { return poly ? poly->str("t") : "inf"; }

  bool operator==(const Place& o) const { return poly == o.poly; }
  std::strong_ordering operator<=>(const Place& o) const {
    if (is_infinity() || o.is_infinity()) return o.is_infinity() <=> is_infinity();
    if (auto c = poly->degree() <=> o.poly->degree(); c != 0) return c;
    return *poly <=> *o.poly;
  }
};

/// Residue field F_q[t]/(P) of a place; F_q[t]/(t) stands in for F_q at infinity.
std::shared_ptr<const ExtensionField<FqElem>> residue_field_of(const FiniteField& k, const Place& v);

/// The family of tame residues of a degree-2 class of F_q(t), one unit per place
/// (trivial entries are not stored).
struct ResidueVector {
  const FiniteField* field = nullptr;
  std::map<Place, ResidueElem> entries;

  ResidueElem at(const Place& v) const;
  void set(const Place& v, const ResidueElem& x);
  std::set<Place> support() const;

  ResidueVector operator+(const ResidueVector& o) const;
  ResidueVector operator-() const;
  ResidueVector operator-(const ResidueVector& o) const { return *this + (-o); }
  ResidueVector scaled(const BigInt& k) const;

  bool operator==(const ResidueVector& o) const;
  bool equal_on_finite(const ResidueVector& o) const;
  bool is_zero() const { return entries.empty(); }
  std::string str() const;
};

/// Monic irreducible factors of all numerators and denominators of entries.
std::set<FqPoly> support_primes(const FqRatClass& a);

/// d_v(a) as a class over kappa(v); the infinity residue is embedded in F_q[t]/(t).
MilnorClass<ResidueElem> tame_at(const FqRatClass& a, const Place& v);

ResidueVector residue_vector(const FqRatClass& a);

/// N_{kappa(v)/F_q} of a residue unit.
FqElem norm_to_base(const ResidueElem& x, const FiniteField& k);

bool reciprocity_check(const ResidueVector& v);

/// Sets the infinity entry so that reciprocity holds.
ResidueVector complete_at_infinity(ResidueVector v);

/// A class with the given residues; needs reciprocity and a trivial infinity entry.
FqRatClass bt_section(const ResidueVector& v);

/// bt_section after shifting the infinity entry to zero with multiples of {t, g}
/// (g the chosen generator of F_q^x); the shift is added back.
FqRatClass bt_section_normalized(const ResidueVector& v);

/// Equality in K_2 F_q(t), decided by residue vectors.
bool k2_equal(const FqRatClass& a, const FqRatClass& b);

// ---------------------------------------------------------------------------
// Irreducibility certificates over the two supported bases.

bool certify_irreducible(const Poly<FqElem>& f);

/// Irreducibility over F_q(t): Eisenstein at a prime of F_q[t], or a
/// degree-preserving specialization t -> c that is irreducible over F_q.
/// False means "not certified", not "reducible".
bool certify_irreducible(const Poly<FqRat>& f);

/// p-th root in K when it exists.
std::optional<FqElem> pth_root(const FqElem& x);
std::optional<FqRat> pth_root(const FqRat& x);

template <class K>
std::optional<Poly<K>> pth_root_poly(const Poly<K>& f, std::int64_t p) {
  std::vector<K> c;
  for (int i = 0; i <= f.degree(); ++i) {
    const K& a = f.coeff(i);
    if (i % p != 0) {
      if (!a.is_zero()) return std::nullopt;
      continue;
    }
    auto r = pth_root(a);
    if (!r) return std::nullopt;
    c.push_back(*r);
  }
  return Poly<K>(f.base(), std::move(c));
}

template <class K>
std::int64_t characteristic_of(const K& x) {
  if constexpr (std::is_same_v<K, FqElem>) {
    return x.field().characteristic();
  } else {
    return characteristic_of(x.base());
  }
}

// ---------------------------------------------------------------------------
// Simple extensions F' = K[X]/(pi) and the norm N_{F'/K}.

template <class K>
struct SimpleExtension {
  Poly<K> pi;
  std::shared_ptr<const ExtensionField<K>> field;

  int degree() const { return pi.degree(); }
  Ext<K> theta() const { return Ext<K>::generator(field); }
  Ext<K> embed(const K& c) const { return Ext<K>::embed(field, c); }
  Ext<K> element(const Poly<K>& g) const { return Ext<K>(field, g); }
  K base_one() const { return pi.base().one(); }
};

/// F' = K[X]/(pi); pi must be monic and certified irreducible.
template <class K>
SimpleExtension<K> simple_extension(const Poly<K>& pi, std::string var = "X") {
  if (pi.degree() < 1) fail(ErrorCode::InvalidArgument, "extension polynomial must have positive degree");
  if (!pi.is_monic()) fail(ErrorCode::NotMonic, "extension polynomial must be monic");
  if (!certify_irreducible(pi)) fail(ErrorCode::NotIrreducible, "could not certify " + pi.str(var) + " irreducible");
  return {pi, Ext<K>::make_field(pi, std::move(var))};
}

/// Skips the irreducibility certificate (used when a tower certifies it).
template <class K>
SimpleExtension<K> simple_extension_trusted(const Poly<K>& pi, std::string var = "Y") {
  if (!pi.is_monic()) fail(ErrorCode::NotMonic, "extension polynomial must be monic");
  return {pi, Ext<K>::make_field(pi, std::move(var))};
}

/// d_inf{A, B} for polynomials: (-1)^{deg A deg B} lc(A)^{deg B} / lc(B)^{deg A}.
template <class K>
K infinity_residue(const Poly<K>& a, const Poly<K>& b) {
  const int da = a.degree(), db = b.degree();
  K r = power(a.leading(), BigInt(db)) / power(b.leading(), BigInt(da));
  if ((da * db) % 2 != 0) r = -r;
  return r;
}

/// One symbol {A, B} of the Euclid preimage with its sign.
template <class K>
struct EuclidTerm {
  int sign;
  Poly<K> a, b;
};

/// beta = {pi, g} + S(pi, g): d_pi(beta) = g mod pi and d_P(beta) = 0 at every
/// other finite P. With r = A mod B,
///   S(A, B) = 0                                    if B is constant,
///   S(A, B) = -{r, B}                              if r is constant,
///   S(A, B) = -{r, B} + {r, B mod r} + S(r, B mod r) otherwise.
/// Residues of {A, B} at P | B are rbar^{v_P B}; -{r, B} cancels them, and
/// {r, B mod r} cancels what -{r, B} leaves at P | r.
template <class K>
std::vector<EuclidTerm<K>> euclid_preimage(const Poly<K>& pi, const Poly<K>& g) {
  std::vector<EuclidTerm<K>> t{{1, pi, g}};
  Poly<K> a = pi, b = g;
  while (b.degree() > 0) {
    Poly<K> r = a % b;
    if (r.is_zero()) fail(ErrorCode::InvalidArgument, "Euclid preimage needs coprime inputs");
    t.push_back({-1, r, b});
    if (r.degree() == 0) break;
    Poly<K> r2 = b % r;
    t.push_back({1, r, r2});
    a = std::move(r);
    b = std::move(r2);
  }
  return t;
}

/// N_{F'/K}(x) for a unit x of F' via the Euclid preimage.
template <class K>
K norm_euclid(const SimpleExtension<K>& E, const Ext<K>& x) {
  if (x.is_zero()) fail(ErrorCode::ZeroEntry, "norm of zero");
  if (x.modulus() != E.pi) fail(ErrorCode::ContextMismatch, "element is not in this extension");
  K d = E.base_one();
  for (const auto& t : euclid_preimage(E.pi, x.value())) {
    const K r = infinity_residue(t.a, t.b);
    d = t.sign > 0 ? d * r : d / r;
  }
  return kNormInfinitySign > 0 ? d : d.inv();
}

// Coprime bases: pairwise coprime squarefree monic polynomials of positive
// degree such that every input is a unit times a product of their powers.

template <class K>
std::vector<Poly<K>> squarefree_pieces(Poly<K> f) {
  std::vector<Poly<K>> out;
  const std::int64_t p = characteristic_of(f.base());
  for (int guard = 0; guard < 64 && f.degree() > 0; ++guard) {
    f = f.monic();
    Poly<K> d = f.derivative();
    if (d.is_zero()) {
      auto r = pth_root_poly(f, p);
      if (!r) {
        out.push_back(f);  // inseparable and not a p-th power: kept whole
        return out;
      }
      f = *r;
      continue;
    }
    Poly<K> g = gcd(f, d);
    out.push_back(f.exact_div(g).monic());
    f = g;
  }
  return out;
}

template <class K>
class CoprimeBase {
 public:
  const std::vector<Poly<K>>& elements() const noexcept { return base_; }

  void add(const Poly<K>& f) {
    if (f.degree() < 1) return;
    for (auto& piece : squarefree_pieces(f)) insert(piece);
  }

  bool contains(const Poly<K>& d) const { return std::find(base_.begin(), base_.end(), d) != base_.end(); }

 private:
  void insert(Poly<K> f) {
    std::vector<Poly<K>> pending{f.monic()};
    while (!pending.empty()) {
      Poly<K> x = pending.back();
      pending.pop_back();
      if (x.degree() < 1 || contains(x)) continue;
      bool split = false;
      for (std::size_t i = 0; i < base_.size(); ++i) {
        Poly<K> g = gcd(x, base_[i]);
        if (g.degree() < 1) continue;
        Poly<K> b = base_[i];
        base_.erase(base_.begin() + static_cast<std::ptrdiff_t>(i));
        pending.push_back(g);
        pending.push_back(x.exact_div(g).monic());
        pending.push_back(b.exact_div(g).monic());
        split = true;
        break;
      }
      if (!split) base_.push_back(x);
    }
  }

  std::vector<Poly<K>> base_;
};

/// Trace of a coprime-base norm computation.
struct NormStats {
  int corrections = 0;
  std::size_t base_size = 0;
};

/// Preimage beta of xi under the finite residues of K(X): d_pi(beta) = xi and
/// every other finite residue vanishes. Formal residues are taken at the
/// elements of a coprime base, so no factorization over K is needed; the
/// highest-degree nonzero residue is cancelled by -c{D, lifts}, which only
/// creates residues at strictly smaller degree.
template <class K>
MilnorClass<RatFunc<K>> coprime_base_preimage(const MilnorClass<Ext<K>>& xi, const SimpleExtension<K>& E,
                                              NormStats* stats = nullptr) {
  using RF = RatFunc<K>;
  const int n = xi.degree();
  MilnorClass<RF> beta(n + 1);
  CoprimeBase<K> base;
  base.add(E.pi);
  const RF pi_rf(E.pi);
  for (const auto& [entries, c] : xi.terms()) {
    std::vector<RF> e{pi_rf};
    for (const auto& x : entries) {
      if (x.modulus() != E.pi) fail(ErrorCode::ContextMismatch, "class is not over this extension");
      e.emplace_back(x.value());
      base.add(x.value());
    }
    beta.add_term(e, c);
  }
  int corrections = 0;
  while (true) {
    std::optional<Poly<K>> worst;
    MilnorClass<Ext<K>> worst_res(n);
    for (const auto& d : base.elements()) {
      if (d == E.pi) continue;
      if (worst && d.degree() <= worst->degree()) continue;
      auto res = tame(beta, PolyPlace<K>(d));
      if (res.is_zero()) continue;
      worst = d;
      worst_res = std::move(res);
    }
    if (!worst) break;
    if (++corrections > kCorrectionBound) fail(ErrorCode::TerminationBound, "coprime-base corrections did not terminate");
    const RF d_rf(*worst);
    for (const auto& [entries, c] : worst_res.terms()) {
      std::vector<RF> e{d_rf};
      for (const auto& u : entries) {
        e.emplace_back(u.value());
        base.add(u.value());
      }
      beta.add_term(e, -c);
    }
  }
  if (stats) {
    stats->corrections = corrections;
    stats->base_size = base.elements().size();
  }
  return beta;
}

/// N_{F'/K}: K_n F' -> K_n K through the coprime-base preimage.
template <class K>
MilnorClass<K> norm_coprime_base(const MilnorClass<Ext<K>>& xi, const SimpleExtension<K>& E, NormStats* stats = nullptr) {
  auto beta = coprime_base_preimage(xi, E, stats);
  auto d = tame(beta, InfinityPlace<K>{E.base_one()});
  return kNormInfinitySign > 0 ? d : -d;
}

template <class K>
K norm_element_coprime_base(const SimpleExtension<K>& E, const Ext<K>& x) {
  return collapse_degree_one(norm_coprime_base(MilnorClass<Ext<K>>::symbol({x}), E), E.base_one());
}

/// N_{F'/K} on K_n for n in {0, 1, 2}: integers scale by [F':K], n = 1 uses the
/// Euclid preimage, n = 2 the coprime-base preimage.
template <class K>
MilnorClass<K> norm(const MilnorClass<Ext<K>>& xi, const SimpleExtension<K>& E) {
  switch (xi.degree()) {
    case 0: {
      MilnorClass<K> out(0);
      for (const auto& [e, c] : xi.terms()) out.add_term({}, c * E.degree());
      return out;
    }
    case 1: {
      K r = E.base_one();
      for (const auto& [e, c] : xi.terms()) r = r * power(norm_euclid(E, e[0]), c);
      MilnorClass<K> out(1);
      if (!(r == r.one())) out.add_term({r}, 1);
      return out;
    }
    case 2:
      return norm_coprime_base(xi, E);
    default:
      fail(ErrorCode::DegreeTooLarge, "norm is implemented for degrees 0, 1, 2");
  }
}

/// iota_*: K_n K -> K_n F'.
template <class K>
MilnorClass<Ext<K>> embed_class(const MilnorClass<K>& x, const SimpleExtension<K>& E) {
  MilnorClass<Ext<K>> out(x.degree());
  for (const auto& [e, c] : x.terms()) {
    std::vector<Ext<K>> v;
    for (const auto& a : e) v.push_back(E.embed(a));
    out.add_term(v, c);
  }
  return out;
}

/// Equality in K^M_n K for n <= 2, using the available canonical forms.
template <class K>
bool k_equal(const MilnorClass<K>& a, const MilnorClass<K>& b, const K& one) {
  if (a.degree() != b.degree()) return false;
  switch (a.degree()) {
    case 0:
      return a == b;
    case 1:
      return collapse_degree_one(a, one) == collapse_degree_one(b, one);
    case 2:
      if constexpr (std::is_same_v<K, FqElem>) {
        FfKGroup g = ff_kgroup(one.field().order(), 2);
        return g.coordinate(a - b) == 0;
      } else if constexpr (std::is_same_v<K, FqRat>) {
        return k2_equal(a, b);
      } else {
        fail(ErrorCode::InvalidArgument, "no canonical form for K_2 over this base");
      }
    default:
      fail(ErrorCode::DegreeTooLarge, "canonical forms exist for degrees <= 2");
  }
}

/// N({iota x, y}) = {x, N y}.
template <class K>
bool projection_formula_check(const MilnorClass<K>& x, const MilnorClass<Ext<K>>& y, const SimpleExtension<K>& E) {
  if (x.degree() + y.degree() > 2) fail(ErrorCode::DegreeTooLarge, "deg x + deg y must be at most 2");
  const auto lhs = norm(product(embed_class(x, E), y), E);
  const auto rhs = product(x, norm(y, E));
  return k_equal(lhs, rhs, E.base_one());
}

// ---------------------------------------------------------------------------
// Towers K < F' = K[X]/(pi1) < F'' = F'[Y]/(pi2).

template <class K>
struct Tower {
  SimpleExtension<K> lower;             // F'/K
  SimpleExtension<Ext<K>> upper;        // F''/F'
  SimpleExtension<K> composite;         // F'' = K[Z]/(mu)
  std::int64_t shift = 0;               // z = y + shift * x
  std::vector<std::vector<K>> z_powers_inverse;  // coordinates of x^i y^j in powers of z
};

namespace detail {

/// Coordinates of an element of F'' in the K-basis x^i y^j (index i + d1 * j).
template <class K>
std::vector<K> tower_coords(const Ext<Ext<K>>& v, int d1, int d2, const K& zero) {
  std::vector<K> out(static_cast<std::size_t>(d1 * d2), zero);
  for (int j = 0; j <= v.value().degree(); ++j) {
    const Ext<K>& cj = v.value().coeff(j);
    for (int i = 0; i <= cj.value().degree(); ++i) out[static_cast<std::size_t>(i + d1 * j)] = cj.value().coeff(i);
  }
  (void)d2;
  return out;
}

/// Solves M^T a = b where the rows of M are given; nullopt when singular.
template <class K>
std::optional<std::vector<K>> solve_columns(std::vector<std::vector<K>> cols, std::vector<K> b) {
  // Unknowns a_k with sum_k a_k cols[k] = b.
  const std::size_t n = b.size(), m = cols.size();
  std::vector<std::vector<K>> A(n, std::vector<K>(m + 1, b[0].zero()));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < m; ++k) A[r][k] = cols[k][r];
    A[r][m] = b[r];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < m && row < n; ++c) {
    std::size_t piv = row;
    while (piv < n && A[piv][c].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(A[piv], A[row]);
    const K inv = A[row][c].inv();
    for (auto& x : A[row]) x = x * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || A[r][c].is_zero()) continue;
      const K f = A[r][c];
      for (std::size_t k = c; k <= m; ++k) A[r][k] = A[r][k] - f * A[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (!A[r][m].is_zero()) return std::nullopt;
  if (pivot_col.size() != m) return std::nullopt;
  std::vector<K> a(m, b[0].zero());
  for (std::size_t r = 0; r < row; ++r) a[pivot_col[r]] = A[r][m];
  return a;
}

}  // namespace detail

/// Builds the composite K[Z]/(mu) for z = y + c x, trying c = 0, 1, 2, ... in
/// the prime field. Fails with EliminationFailed when no such z generates F''
/// and with NotIrreducible when mu cannot be certified.
template <class K>
Tower<K> make_tower(const Poly<K>& pi1, const Poly<Ext<K>>& pi2) {
  Tower<K> T{simple_extension(pi1, "X"), simple_extension_trusted(pi2, "Y"), {}, 0, {}};
  const int d1 = pi1.degree(), d2 = pi2.degree(), D = d1 * d2;
  const K one = pi1.base().one(), zero = pi1.base().zero();
  const Ext<K> x = T.lower.theta();
  const std::int64_t p = characteristic_of(one);
  for (std::int64_t c = 0; c < std::max<std::int64_t>(p, 2) && c < 16; ++c) {
    const Ext<Ext<K>> z = T.upper.theta() + T.upper.embed(x * x.from_int(c));
    std::vector<std::vector<K>> cols;
    Ext<Ext<K>> zp = z.one();
    for (int k = 0; k < D; ++k) {
      cols.push_back(detail::tower_coords(zp, d1, d2, zero));
      zp = zp * z;
    }
    // z^D = sum a_k z^k; solvable with a unique a exactly when 1, z, ..., z^{D-1} is a basis.
    auto a = detail::solve_columns(cols, detail::tower_coords(zp, d1, d2, zero));
    if (!a) continue;
    std::vector<K> mu(static_cast<std::size_t>(D) + 1, zero);
    for (int k = 0; k < D; ++k) mu[static_cast<std::size_t>(k)] = -(*a)[static_cast<std::size_t>(k)];
    mu.back() = one;
    Poly<K> mup(one, std::move(mu));
    if (!certify_irreducible(mup)) fail(ErrorCode::NotIrreducible, "could not certify the composite polynomial irreducible");
    T.composite = simple_extension_trusted(mup, "Z");
    T.shift = c;
    T.z_powers_inverse = std::move(cols);
    return T;
  }
  fail(ErrorCode::EliminationFailed, "no primitive element y + c*x found");
}

/// The element of K[Z]/(mu) representing v in F''.
template <class K>
Ext<K> to_composite(const Tower<K>& T, const Ext<Ext<K>>& v) {
  const int d1 = T.lower.degree(), d2 = T.upper.degree();
  const K zero = T.lower.base_one().zero();
  auto a = detail::solve_columns(T.z_powers_inverse, detail::tower_coords(v, d1, d2, zero));
  if (!a) fail(ErrorCode::EliminationFailed, "element not expressible in the primitive element");
  return T.composite.element(Poly<K>(zero, std::move(*a)));
}

struct TowerCheck {
  bool ok = false;
  std::string stepwise;
  std::string direct;
};

/// N_{F'/K}(N_{F''/F'}(xi)) against N_{F''/K}(xi) computed in the composite.
template <class K>
TowerCheck functoriality_check(const Tower<K>& T, const Ext<Ext<K>>& xi) {
  const Ext<K> mid = norm_euclid(T.upper, xi);
  const K stepwise = norm_euclid(T.lower, mid);
  const K direct = norm_euclid(T.composite, to_composite(T, xi));
  return {stepwise == direct, stepwise.str(), direct.str()};
}

}  // namespace milnor
