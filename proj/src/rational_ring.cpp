#include "milnor/rational_ring.hpp"

namespace milnor {

namespace {

const FiniteField& field_of(const KPoly& f) { return f.like().field(); }

FqRat rat_like(const FiniteField& k) { return FqRat(FqPoly(k.zero())); }

// Bivariate polynomial as a polynomial in t1 over F_q(t2).
Poly<FqRat> to_t1(const KPoly& f) {
  const FiniteField& k = field_of(f);
  std::map<int, std::vector<FqElem>> rows;
  for (const auto& [e, c] : f.terms()) {
    auto& r = rows[e[0]];
    if (static_cast<int>(r.size()) <= e[1]) r.resize(static_cast<std::size_t>(e[1] + 1), k.zero());
    r[static_cast<std::size_t>(e[1])] = r[static_cast<std::size_t>(e[1])] + c;
  }
  const int deg = rows.empty() ? -1 : rows.rbegin()->first;
  std::vector<FqRat> cs(static_cast<std::size_t>(deg + 1), rat_like(k));
  for (auto& [i, r] : rows) cs[static_cast<std::size_t>(i)] = FqRat(FqPoly(k.zero(), std::move(r)));
  return Poly<FqRat>(rat_like(k), std::move(cs));
}

KPoly from_t1(const Poly<FqRat>& f, const FiniteField& k) {
  KPoly r(2, k.zero());
  for (int i = 0; i <= f.degree(); ++i) {
    const FqRat& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c.den().degree() > 0) fail(ErrorCode::InvalidArgument, "coefficient is not a polynomial in t2");
    const FqElem s = c.den().coeff(0).inv();
    for (int j = 0; j <= c.num().degree(); ++j) r.add({i, j}, c.num().coeff(j) * s);
  }
  return r;
}

// Monic gcd of the (polynomial) coefficients.
FqPoly content(const Poly<FqRat>& f, const FiniteField& k) {
  FqPoly g(k.zero());
  for (const auto& c : f.coeffs()) g = gcd(g, c.num());
  return g;
}

FqPoly lcm(const FqPoly& a, const FqPoly& b) { return (a * b).exact_div(gcd(a, b)).monic(); }

FqElem leading_coeff(const KPoly& f) {
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    if (!it->second.is_zero()) return it->second;
  return field_of(f).zero();
}

KPoly normalized(const KPoly& f) {
  if (f.is_zero()) return f;
  return f * leading_coeff(f).inv();
}

KPoly exact_quotient(const KPoly& a, const KPoly& g) {
  const FiniteField& k = field_of(a);
  if (a.nvars() == 1) return from_fqpoly(to_fqpoly(a).exact_div(to_fqpoly(g)));
  return from_t1(to_t1(a).exact_div(to_t1(g)), k);
}

}  // namespace

FqPoly to_fqpoly(const KPoly& f) {
  if (f.nvars() != 1) fail(ErrorCode::InvalidArgument, "expected a univariate polynomial");
  const FiniteField& k = field_of(f);
  std::vector<FqElem> c;
  for (const auto& [e, x] : f.terms()) {
    if (static_cast<int>(c.size()) <= e[0]) c.resize(static_cast<std::size_t>(e[0] + 1), k.zero());
    c[static_cast<std::size_t>(e[0])] = x;
  }
  return FqPoly(k.zero(), std::move(c));
}

KPoly from_fqpoly(const FqPoly& f) {
  KPoly r(1, f.base());
  for (int i = 0; i <= f.degree(); ++i) r.add({i, 0}, f.coeff(i));
  return r;
}

FqPoly specialize(const KPoly& f, const FqPoly& g) {
  FqPoly r(g.base().zero());
  std::map<int, FqPoly> gpow;
  for (const auto& [e, c] : f.terms()) {
    if (c.is_zero()) continue;
    auto it = gpow.find(e[1]);
    if (it == gpow.end()) {
      FqPoly gp = g.one();
      for (int i = 0; i < e[1]; ++i) gp = gp * g;
      it = gpow.emplace(e[1], std::move(gp)).first;
    }
    r = r + FqPoly::monomial(c, e[0]) * it->second;
  }
  return r;
}

KPoly kpoly_gcd(const KPoly& a, const KPoly& b) {
  if (a.nvars() != b.nvars()) fail(ErrorCode::ContextMismatch, "gcd of polynomials in different rings");
  const FiniteField& k = field_of(a);
  if (a.nvars() == 1) return from_fqpoly(gcd(to_fqpoly(a), to_fqpoly(b)));
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  const Poly<FqRat> A = to_t1(a), B = to_t1(b);
  // gcd over F_q(t2)[t1], made primitive over F_q[t2], times the gcd of contents.
  Poly<FqRat> G = gcd(A, B);
  FqPoly L = FqPoly::constant(k.one());
  for (const auto& c : G.coeffs()) L = lcm(L, c.den());
  G = G * FqRat(L);
  G = G * FqRat(FqPoly::constant(k.one()), content(G, k));
  G = G * FqRat(gcd(content(A, k), content(B, k)));
  return normalized(from_t1(G, k));
}

KappaRat::KappaRat(KPoly num, KPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) fail(ErrorCode::ContextMismatch, "numerator and denominator differ in variables");
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    num_ = num_.zero();
    den_ = den_.one();
    return;
  }
  const KPoly g = kpoly_gcd(num_, den_);
  if (!(g == g.one())) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  const FqElem s = leading_coeff(den_).inv();
  num_ = num_ * s;
  den_ = den_ * s;
}

KappaRat KappaRat::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  return KappaRat(den_, num_);
}

FqRat KappaRat::univariate() const { return FqRat(to_fqpoly(num_), to_fqpoly(den_)); }

std::string KappaRat::str() const {
  if (nvars() == 1) return univariate().str();
  if (den_ == den_.one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::vector<FqPoly> specialization_points(const FiniteField& k, std::size_t count) {
  std::vector<FqPoly> out;
  const FqPoly zero(k.zero()), one = FqPoly::constant(k.one()), x = FqPoly::x(k.zero());
  const std::uint64_t q = static_cast<std::uint64_t>(k.order());
  for (std::uint64_t j = 0; out.size() < count; ++j) {
    std::vector<FqElem> c;
    for (std::uint64_t r = j; r > 0; r /= q) c.push_back(k.from_code(static_cast<std::int64_t>(r % q)));
    FqPoly g(k.zero(), std::move(c));
    if (g == zero || g == one || g == x) continue;
    out.push_back(std::move(g));
  }
  return out;
}

DeltaReport specialized_vanishing(const KappaTerms& terms, int degree, const FiniteField& k, const DeltaOptions& opts) {
  DeltaReport rep;
  // K^M_n F_q(t1) = 0 for n >= 3: the images carry no information.
  if (degree >= 3 || opts.specializations <= 0) return rep;
  const std::size_t want = static_cast<std::size_t>(opts.specializations);
  const auto points = specialization_points(k, 8 * want);
  const FqRat one = FqRat::constant(k.one());
  for (const auto& g : points) {
    if (rep.specializations_used >= opts.specializations) break;
    MilnorClass<FqRat> image(degree);
    bool defined = true;
    for (const auto& [entries, c] : terms) {
      std::vector<FqRat> e;
      for (const auto& x : entries) {
        const FqPoly n = specialize(x.num(), g), d = specialize(x.den(), g);
        if (n.is_zero() || d.is_zero()) {
          defined = false;
          break;
        }
        e.push_back(FqRat(n, d));
      }
      if (!defined) break;
      image.add_term(e, c);
    }
    if (!defined) continue;
    ++rep.specializations_used;
    bool zero = true;
    if (degree == 1) {
      FqRat prod = one;
      for (const auto& [e, c] : image.terms()) prod = prod * power(e[0], c);
      zero = prod == one;
    } else if (degree == 2) {
      zero = residue_vector(image).is_zero();
    } else {
      zero = image.is_zero();
    }
    if (!zero) {
      rep.vanishes = false;
      rep.witness = "t2 := " + g.str("t1") + " gives " + image.str();
      return rep;
    }
  }
  return rep;
}

}  // namespace milnor
