#include "milnor/bass_tate.hpp"

#include <sstream>

namespace milnor {

namespace {

FqElem ratfunc_eval(const FqPoly& p, const FqElem& c) { return p.eval(c); }

FqPoly lcm(const FqPoly& a, const FqPoly& b) { return (a * b).exact_div(gcd(a, b)).monic(); }

const FiniteField& field_of(const FqRatClass& a) {
  for (const auto& [e, c] : a.terms()) return e.front().base().field();
  fail(ErrorCode::InvalidArgument, "empty class has no field");
}

}  // namespace

std::shared_ptr<const ExtensionField<FqElem>> residue_field_of(const FiniteField& k, const Place& v) {
  if (v.is_infinity()) return ResidueElem::make_field(FqPoly::x(k.zero()), "t");
  return ResidueElem::make_field(*v.poly, "t");
}

ResidueElem ResidueVector::at(const Place& v) const {
  if (auto it = entries.find(v); it != entries.end()) return it->second;
  if (!field) fail(ErrorCode::InvalidArgument, "residue vector without a base field");
  return ResidueElem::embed(residue_field_of(*field, v), field->one());
}

void ResidueVector::set(const Place& v, const ResidueElem& x) {
  if (x.is_zero()) fail(ErrorCode::ZeroElement, "residues are units");
  if (x == x.one()) {
    entries.erase(v);
  } else {
    entries.insert_or_assign(v, x);
  }
}

std::set<Place> ResidueVector::support() const {
  std::set<Place> s;
  for (const auto& [v, x] : entries) s.insert(v);
  return s;
}

ResidueVector ResidueVector::operator+(const ResidueVector& o) const {
  if (!field) return o;
  if (!o.field) return *this;
  if (field != o.field) fail(ErrorCode::ContextMismatch, "residue vectors over different fields");
  ResidueVector r = *this;
  for (const auto& [v, x] : o.entries) r.set(v, r.at(v) * x);
  return r;
}

ResidueVector ResidueVector::operator-() const {
  ResidueVector r = *this;
  for (auto& [v, x] : r.entries) x = x.inv();
  return r;
}

ResidueVector ResidueVector::scaled(const BigInt& k) const {
  ResidueVector r{field, {}};
  for (const auto& [v, x] : entries) r.set(v, power(x, k));
  return r;
}

bool ResidueVector::operator==(const ResidueVector& o) const { return entries == o.entries; }

bool ResidueVector::equal_on_finite(const ResidueVector& o) const {
  auto finite = [](const ResidueVector& r) {
    auto e = r.entries;
    e.erase(Place::infinity());
    return e;
  };
  return finite(*this) == finite(o);
}

std::string ResidueVector::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [v, x] : entries) {
    if (!first) os << ", ";
    first = false;
    os << v.str() << " -> " << x.str();
  }
  os << "}";
  return os.str();
}

std::set<FqPoly> support_primes(const FqRatClass& a) {
  std::set<FqPoly> out;
  for (const auto& [e, c] : a.terms())
    for (const auto& f : e)
      for (const FqPoly* p : {&f.num(), &f.den()})
        if (p->degree() > 0)
          for (const auto& [P, m] : poly_factor(*p).factors) out.insert(P);
  return out;
}

MilnorClass<ResidueElem> tame_at(const FqRatClass& a, const Place& v) {
  if (!v.is_infinity()) return tame(a, PolyPlace<FqElem>(*v.poly, "t"));
  const FiniteField& k = field_of(a);
  auto t = tame(a, InfinityPlace<FqElem>{k.one()});
  auto F = residue_field_of(k, v);
  MilnorClass<ResidueElem> out(t.degree());
  for (const auto& [e, c] : t.terms()) {
    std::vector<ResidueElem> r;
    for (const auto& x : e) r.push_back(ResidueElem::embed(F, x));
    out.add_term(r, c);
  }
  return out;
}

ResidueVector residue_vector(const FqRatClass& a) {
  if (a.degree() != 2) fail(ErrorCode::InvalidArgument, "residue vectors are defined for degree-2 classes");
  ResidueVector rv;
  if (a.terms().empty()) return rv;
  const FiniteField& k = field_of(a);
  rv.field = &k;
  std::vector<Place> places;
  for (const auto& P : support_primes(a)) places.push_back(Place::finite(P));
  places.push_back(Place::infinity());
  for (const auto& v : places) {
    const ResidueElem one = ResidueElem::embed(residue_field_of(k, v), k.one());
    rv.set(v, collapse_degree_one(tame_at(a, v), one));
  }
  return rv;
}

FqElem norm_to_base(const ResidueElem& x, const FiniteField& k) {
  if (x.is_zero()) fail(ErrorCode::ZeroElement, "norm of zero");
  const int d = x.modulus().degree();
  BigInt q = k.order(), e = 1;
  BigInt qd = 1;
  for (int i = 0; i < d; ++i) qd *= q;
  e = (qd - 1) / (q - 1);
  FqPoly y = powmod(x.value(), e, x.modulus());
  if (y.degree() != 0) fail(ErrorCode::InvalidArgument, "norm did not land in the base field");
  return y.coeff(0);
}

bool reciprocity_check(const ResidueVector& v) {
  if (!v.field) return true;
  FqElem prod = v.field->one();
  for (const auto& [place, x] : v.entries) prod = prod * norm_to_base(x, *v.field);
  return prod == v.field->one();
}

ResidueVector complete_at_infinity(ResidueVector v) {
  if (!v.field) return v;
  FqElem prod = v.field->one();
  for (const auto& [place, x] : v.entries)
    if (!place.is_infinity()) prod = prod * norm_to_base(x, *v.field);
  v.set(Place::infinity(), ResidueElem::embed(residue_field_of(*v.field, Place::infinity()), prod.inv()));
  return v;
}

FqRatClass bt_section(const ResidueVector& v) {
  if (!reciprocity_check(v)) fail(ErrorCode::ReciprocityFails, "residue vector violates reciprocity");
  if (v.entries.count(Place::infinity())) fail(ErrorCode::InfinityEntryNonzero, "infinity entry must be trivial");
  FqRatClass s(2);
  if (v.is_zero()) return s;
  const FiniteField& k = *v.field;
  ResidueVector r{&k, {}};
  for (int iter = 0;; ++iter) {
    if (iter > kCorrectionBound) fail(ErrorCode::TerminationBound, "section corrections did not terminate");
    std::set<Place> places = v.support();
    for (const auto& p : r.support()) places.insert(p);
    std::optional<Place> worst;
    for (auto it = places.rbegin(); it != places.rend(); ++it) {
      if (it->is_infinity()) continue;
      if (!(r.at(*it) == v.at(*it))) {
        worst = *it;
        break;
      }
    }
    if (!worst) break;
    // u with deg u < deg P and ubar = v_P / r_P; {P, u} has residue ubar at P
    // and touches only the factors of u (smaller degree) and infinity.
    const ResidueElem c = v.at(*worst) / r.at(*worst);
    FqRatClass term = FqRatClass::symbol({FqRat(*worst->poly), FqRat(c.value())});
    s += term;
    r = r + residue_vector(term);
  }
  if (!(r == v)) fail(ErrorCode::ReciprocityFails, "infinity residue of the section disagrees");
  return s;
}

FqRatClass bt_section_normalized(const ResidueVector& v) {
  if (!reciprocity_check(v)) fail(ErrorCode::ReciprocityFails, "residue vector violates reciprocity");
  if (!v.field) return FqRatClass(2);
  const FiniteField& k = *v.field;
  const ResidueElem w = v.at(Place::infinity());
  const std::int64_t e = w.value().is_zero() ? 0 : w.value().coeff(0).exponent();
  const std::int64_t qm1 = k.order() - 1;
  const std::int64_t shift = (qm1 - e % qm1) % qm1;
  FqRatClass ref = FqRatClass::symbol({FqRat(FqPoly::x(k.zero())), FqRat::constant(k.generator())});
  if (shift == 0 || qm1 == 1) return bt_section(v);
  const ResidueVector vp = v - residue_vector(ref).scaled(shift);
  return bt_section(vp) + ref.scaled(shift);
}

bool k2_equal(const FqRatClass& a, const FqRatClass& b) { return residue_vector(a - b).is_zero(); }

bool certify_irreducible(const Poly<FqElem>& f) { return f.degree() >= 1 && is_irreducible(f); }

bool certify_irreducible(const Poly<FqRat>& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const FiniteField& k = f.base().base().field();
  FqPoly L = FqPoly::constant(k.one());
  for (const auto& c : f.coeffs()) L = lcm(L, c.den());
  std::vector<FqPoly> a;
  for (const auto& c : f.coeffs()) a.push_back(c.num() * L.exact_div(c.den()));

  if (!a[0].is_zero() && a[0].degree() > 0) {
    for (const auto& [P, m] : poly_factor(a[0]).factors) {
      if (m != 1 || a[static_cast<std::size_t>(d)].divisible_by(P)) continue;
      bool all = true;
      for (int i = 1; i < d && all; ++i) all = a[static_cast<std::size_t>(i)].divisible_by(P);
      if (all) return true;
    }
  }
  for (std::int64_t code = 0; code < k.order(); ++code) {
    const FqElem c = k.from_code(code);
    if (ratfunc_eval(a.back(), c).is_zero()) continue;
    std::vector<FqElem> s;
    for (const auto& ai : a) s.push_back(ratfunc_eval(ai, c));
    if (is_irreducible(FqPoly(k.zero(), std::move(s)))) return true;
  }
  return false;
}

std::optional<FqElem> pth_root(const FqElem& x) {
  const FiniteField& k = x.field();
  return x.pow(k.order() / k.characteristic());
}

std::optional<FqRat> pth_root(const FqRat& x) {
  const std::int64_t p = x.base().field().characteristic();
  auto n = pth_root_poly(x.num(), p), d = pth_root_poly(x.den(), p);
  if (!n || !d) return std::nullopt;
  return FqRat(*n, *d);
}

}  // namespace milnor
