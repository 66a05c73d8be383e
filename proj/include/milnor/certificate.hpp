#pragma once

#include "milnor/ff_kgroup.hpp"
#include "milnor/localk.hpp"
#include "milnor/snf.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace milnor {

enum class StepKind { BilinearExpand, Swap, SteinbergZero, MinusSelf, SelfToMinusOne, HenselRoot };

const char* step_name(StepKind k) noexcept;
std::optional<StepKind> step_from_name(std::string_view s) noexcept;

/// One rewrite: the state S becomes S - k*T + k*R(T), where R(T) equals T in
/// K^M by the named relation.
///   BilinearExpand   T[pos] = prod y_i^{e_i};  R = sum e_i {.., y_i, ..}
///   Swap             R = -{T with pos, pos2 exchanged}
///   SteinbergZero    two entries of T sum to 1;  R = 0
///   MinusSelf        T[pos+1] = -T[pos];  R = 0
///   SelfToMinusOne   T[pos+1] = T[pos];  R = {T with T[pos+1] = -1}
///   HenselRoot       root^exponent = T[pos];  R = exponent * {T with root at pos}
template <class E>
struct RewriteStep {
  StepKind kind = StepKind::BilinearExpand;
  BigInt multiplicity = 1;
  std::vector<E> term;
  std::size_t pos = 0;
  std::size_t pos2 = 0;
  std::vector<std::pair<E, std::int64_t>> factors;
  std::optional<E> root;
  std::int64_t exponent = 0;
};

/// Claims target = divisor * witness in K^M_n O, witnessed by the steps.
template <class E>
struct DivisibilityCertificate {
  MilnorClass<E> target;
  std::int64_t divisor = 0;
  MilnorClass<E> witness;
  std::vector<RewriteStep<E>> steps;
};

struct VerifyResult {
  bool ok = false;
  std::optional<std::size_t> failing_step;  // none: the final sum failed
  std::string reason;
};

/// Checks one step's side condition and returns R(T).
template <class E>
std::optional<MilnorClass<E>> rewrite(const RewriteStep<E>& s, std::string& why) {
  const std::vector<E>& t = s.term;
  const int n = static_cast<int>(t.size());
  MilnorClass<E> r(n);
  for (const E& x : t)
    if (x.is_zero()) {
      why = "zero entry";
      return std::nullopt;
    }
  auto at = [&](std::size_t i) -> bool {
    if (i >= t.size()) {
      why = "position out of range";
      return false;
    }
    return true;
  };
  switch (s.kind) {
    case StepKind::BilinearExpand: {
      if (!at(s.pos)) return std::nullopt;
      E prod = t[s.pos].one();
      for (const auto& [y, e] : s.factors) {
        if (y.is_zero()) {
          why = "zero factor";
          return std::nullopt;
        }
        prod = prod * y.pow(e);
      }
      if (!matches(prod, t[s.pos])) {
        why = "factors do not multiply to the entry";
        return std::nullopt;
      }
      for (const auto& [y, e] : s.factors) {
        auto u = t;
        u[s.pos] = y;
        r.add_term(u, e);
      }
      return r;
    }
    case StepKind::Swap: {
      if (!at(s.pos) || !at(s.pos2) || s.pos == s.pos2) {
        if (why.empty()) why = "swap positions invalid";
        return std::nullopt;
      }
      auto u = t;
      std::swap(u[s.pos], u[s.pos2]);
      r.add_term(u, -1);
      return r;
    }
    case StepKind::SteinbergZero:
      if (!is_steinberg_relator(t)) {
        why = "term is not a Steinberg relator";
        return std::nullopt;
      }
      return r;
    case StepKind::MinusSelf:
      if (!at(s.pos) || !at(s.pos + 1)) return std::nullopt;
      if (!matches(t[s.pos + 1], -t[s.pos])) {
        why = "entries are not (x, -x)";
        return std::nullopt;
      }
      return r;
    case StepKind::SelfToMinusOne: {
      if (!at(s.pos) || !at(s.pos + 1)) return std::nullopt;
      if (!matches(t[s.pos + 1], t[s.pos])) {
        why = "entries are not (x, x)";
        return std::nullopt;
      }
      auto u = t;
      u[s.pos + 1] = minus_one(t[s.pos]);
      r.add_term(u, 1);
      return r;
    }
    case StepKind::HenselRoot: {
      if (!at(s.pos)) return std::nullopt;
      if (!s.root || s.root->is_zero() || s.exponent < 1) {
        why = "missing root";
        return std::nullopt;
      }
      if (!matches(s.root->pow(s.exponent), t[s.pos])) {
        why = "root^" + std::to_string(s.exponent) + " differs from the entry";
        return std::nullopt;
      }
      auto u = t;
      u[s.pos] = *s.root;
      r.add_term(u, s.exponent);
      return r;
    }
  }
  why = "unknown step";
  return std::nullopt;
}

template <class E>
VerifyResult verify_certificate(const DivisibilityCertificate<E>& c) {
  VerifyResult res;
  if (c.divisor < 2) {
    res.reason = "divisor must be at least 2";
    return res;
  }
  if (c.target.degree() != c.witness.degree()) {
    res.reason = "target and witness degrees differ";
    return res;
  }
  MilnorClass<E> state = c.target;
  try {
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      const auto& s = c.steps[i];
      if (static_cast<int>(s.term.size()) != state.degree()) {
        res.failing_step = i;
        res.reason = "term degree differs from the class degree";
        return res;
      }
      std::string why;
      auto r = rewrite(s, why);
      if (!r) {
        res.failing_step = i;
        res.reason = std::string(step_name(s.kind)) + ": " + why;
        return res;
      }
      state.add_term(s.term, -s.multiplicity);
      for (const auto& [e, k] : r->terms()) state.add_term(e, k * s.multiplicity);
    }
  } catch (const Error& e) {
    res.reason = e.what();
    return res;
  }
  if (!(state == c.witness.scaled(c.divisor))) {
    res.reason = "replayed class differs from divisor * witness";
    return res;
  }
  res.ok = true;
  return res;
}

namespace detail {

/// ell-th root of a unit x = w * y (w Teichmuller, y principal) when one exists.
template <class T>
std::optional<T> unit_root(const T& x, std::int64_t ell, const LocalField<T>& F) {
  const std::int64_t qm1 = F.residue_order() - 1;
  const T w = teichmuller(x);
  const T y = x / w;
  const std::int64_t e = w.residue().exponent();
  const std::int64_t d = gcd_i64(ell, qm1);
  if (e % d != 0) return std::nullopt;
  const std::int64_t m = qm1 / d;
  const std::int64_t s = m == 1 ? 0 : mul_mod(e / d, inv_mod((ell / d) % m, m), m);
  const T omega_g = teichmuller_lift(F.residue_field().generator(), F);
  T r = omega_g.pow(s);
  if (!matches(y, y.one())) r = r * principal_root(y, ell, y.absolute_precision());
  if (!matches(r.pow(ell), x)) return std::nullopt;
  return r;
}

}  // namespace detail

/// Certificate that a class of unit symbols is m-divisible, for any m >= 2
/// prime to p. Fails with NotDivisible when the Teichmuller residue is not in
/// the span of the Steinberg relators and m (possible only in degree 1).
template <class T>
DivisibilityCertificate<T> build_certificate(const MilnorClass<T>& a, std::int64_t m, const LocalField<T>& F) {
  if (m < 2) fail(ErrorCode::BadModulus, "divisor must be at least 2");
  if (gcd_i64(m, F.residue_char()) != 1) fail(ErrorCode::BadPrime, "divisor shares a factor with the residue characteristic");
  const int n = a.degree();
  for (const auto& [e, c] : a.terms())
    for (const T& x : e) {
      if (x.is_zero()) fail(ErrorCode::ZeroEntry, "symbol entries must be nonzero");
      if (x.valuation() != 0) fail(ErrorCode::PiEntryPresent, "entry " + x.str() + " is not a unit");
    }

  DivisibilityCertificate<T> cert;
  cert.target = a;
  cert.divisor = m;
  cert.witness = MilnorClass<T>(n);
  auto& steps = cert.steps;

  auto expand = [&](const BigInt& k, const std::vector<T>& term, std::size_t pos, std::vector<std::pair<T, std::int64_t>> f) {
    RewriteStep<T> s;
    s.kind = StepKind::BilinearExpand;
    s.multiplicity = k;
    s.term = term;
    s.pos = pos;
    s.factors = std::move(f);
    steps.push_back(std::move(s));
  };
  auto root_step = [&](const BigInt& k, const std::vector<T>& term, std::size_t pos, const T& root) {
    RewriteStep<T> s;
    s.kind = StepKind::HenselRoot;
    s.multiplicity = k;
    s.term = term;
    s.pos = pos;
    s.root = root;
    s.exponent = m;
    steps.push_back(std::move(s));
    auto w = term;
    w[pos] = root;
    cert.witness.add_term(w, k);
  };

  const FiniteField& kappa = F.residue_field();
  const std::int64_t qm1 = kappa.order() - 1;
  const T omega_g = teichmuller_lift(kappa.generator(), F);
  const T one = F.one();
  BigInt total = 0;  // coefficient of G = {omega_g, ..., omega_g}
  const std::vector<T> G(static_cast<std::size_t>(n), omega_g);

  // Peels the Teichmuller exponents off an all-Teichmuller term, one position at a time.
  auto collapse_teichmuller = [&](BigInt k, std::vector<T> term, const std::vector<std::int64_t>& exps) {
    for (std::size_t i = 0; i < term.size(); ++i) {
      expand(k, term, i, {{omega_g, exps[i]}});
      k *= exps[i];
      if (k == 0) return BigInt(0);
      term[i] = omega_g;
    }
    return k;
  };

  for (const auto& [entries, coeff] : a.terms()) {
    bool done = false;
    for (std::size_t i = 0; i < entries.size() && !done; ++i) {
      if (auto r = detail::unit_root(entries[i], m, F)) {
        root_step(coeff, entries, i, *r);
        done = true;
      }
    }
    if (done) continue;

    // Split every entry as omega * y with y a principal unit.
    std::vector<std::pair<BigInt, std::vector<T>>> work{{coeff, entries}};
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const T w = teichmuller(entries[i]);
      const T y = entries[i] / w;
      if (matches(y, one) || matches(w, one)) continue;
      std::vector<std::pair<BigInt, std::vector<T>>> next;
      for (auto& [k, t] : work) {
        expand(k, t, i, {{w, 1}, {y, 1}});
        auto tw = t, ty = t;
        tw[i] = w;
        ty[i] = y;
        next.emplace_back(k, tw);
        next.emplace_back(k, ty);
      }
      work = std::move(next);
    }
    for (auto& [k, t] : work) {
      std::optional<std::size_t> principal;
      for (std::size_t i = 0; i < t.size() && !principal; ++i)
        if (!matches(teichmuller(t[i]), t[i])) principal = i;
      if (principal) {
        const T& y = t[*principal];
        root_step(k, t, *principal, principal_root(y, m, y.absolute_precision()));
        continue;
      }
      std::vector<std::int64_t> exps;
      for (const T& x : t) exps.push_back(x.residue().exponent());
      total += collapse_teichmuller(k, t, exps);
    }
  }

  if (total != 0 && n >= 1) {
    // total * G lies in the span of (q-1), m and the Steinberg relators of kappa.
    FfKGroup kg = ff_kgroup(kappa.order(), n);
    IntMatrix rows{{big(qm1)}, {big(m)}};
    std::vector<std::vector<std::int64_t>> tuples{{}, {}};
    for (const auto& tup : kg.relator_exponents) {
      if (tup.empty()) continue;
      // The unreduced exponent product: exactly what the expansion chain produces.
      BigInt v = 1;
      for (auto e : tup) v *= e;
      rows.push_back({v});
      tuples.push_back(tup);
    }
    auto pres = AbGroupPresentation::make(1, rows);
    auto coeffs = express_in_relators(pres, IntVector{total});
    if (!coeffs) fail(ErrorCode::NotDivisible, "Teichmuller part is not divisible by " + std::to_string(m));

    // (q-1) * G = {omega_g^(q-1), ...} = {1, ...} = 0.
    const BigInt& a0 = (*coeffs)[0];
    if (a0 != 0) {
      auto t1 = G;
      t1[0] = one;
      expand(-a0, t1, 0, {{omega_g, qm1}});
      expand(a0, t1, 0, {});
    }
    cert.witness.add_term(G, (*coeffs)[1]);
    for (std::size_t r = 2; r < rows.size(); ++r) {
      const BigInt& ar = (*coeffs)[r];
      if (ar == 0) continue;
      const auto& tup = tuples[r];
      std::vector<T> W;
      for (auto e : tup) W.push_back(omega_g.pow(e));
      // Introduce ar * W in exchange for ar * v_r * G (the expansion chain run backwards).
      BigInt k = -ar;
      auto ws = W;
      for (std::size_t s = 0; s < ws.size(); ++s) {
        expand(k, ws, s, {{omega_g, tup[s]}});
        k *= tup[s];
        ws[s] = omega_g;
      }
      // Lift the residue relator: with u = x1 + x2 in U_1, {x1/u, x2/u, ...} is Steinberg.
      const T x1 = W[0], x2 = W[1];
      const T u = x1 + x2;
      if (matches(u, one)) {
        RewriteStep<T> st;
        st.kind = StepKind::SteinbergZero;
        st.multiplicity = ar;
        st.term = W;
        steps.push_back(std::move(st));
        continue;
      }
      const T y1 = x1 / u, y2 = x2 / u;
      const T ru = principal_root(u, m, u.absolute_precision());
      expand(ar, W, 0, {{y1, 1}, {u, 1}});
      auto wa = W, wb = W;
      wa[0] = y1;
      wb[0] = u;
      expand(ar, wa, 1, {{y2, 1}, {u, 1}});
      auto wc = wa, wd = wa;
      wc[1] = y2;
      wd[1] = u;
      RewriteStep<T> st;
      st.kind = StepKind::SteinbergZero;
      st.multiplicity = ar;
      st.term = wc;
      steps.push_back(std::move(st));
      root_step(ar, wb, 0, ru);
      root_step(ar, wd, 1, ru);
    }
  }

  VerifyResult v = verify_certificate(cert);
  if (!v.ok) fail(ErrorCode::PrecisionExhausted, "constructed certificate does not verify: " + v.reason);
  return cert;
}

/// The divisibility witness for degree >= 2 unit symbols and a prime ell != p.
template <class T>
DivisibilityCertificate<T> divisibility_witness(const MilnorClass<T>& a, std::int64_t ell, const LocalField<T>& F) {
  if (!is_prime(ell)) fail(ErrorCode::BadPrime, std::to_string(ell) + " is not prime");
  if (ell == F.residue_char()) fail(ErrorCode::BadPrime, "ell equals the residue characteristic");
  if (a.degree() < 2) fail(ErrorCode::InvalidArgument, "divisibility witnesses need degree >= 2");
  return build_certificate(a, ell, F);
}

namespace detail {

template <class E>
std::string term_str(const std::vector<E>& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += t[i].str();
  }
  return s + "}";
}

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

}  // namespace detail

/// Replayable text form: header lines, then one tab-separated line per step.
template <class E>
std::string certificate_str(const DivisibilityCertificate<E>& c, const std::string& field_name) {
  std::ostringstream os;
  os << "certificate\n";
  os << "field\t" << field_name << "\n";
  os << "divisor\t" << c.divisor << "\n";
  os << "target\t" << c.target.str() << "\n";
  os << "witness\t" << c.witness.str() << "\n";
  for (const auto& s : c.steps) {
    os << step_name(s.kind) << "\tk=" << s.multiplicity.get_str();
    switch (s.kind) {
      case StepKind::BilinearExpand: {
        os << "\tpos=" << s.pos << "\tfactors=";
        for (std::size_t i = 0; i < s.factors.size(); ++i) {
          if (i) os << ";";
          os << s.factors[i].first.str() << "@" << s.factors[i].second;
        }
        break;
      }
      case StepKind::Swap:
        os << "\tpos=" << s.pos << "\tpos2=" << s.pos2;
        break;
      case StepKind::MinusSelf:
      case StepKind::SelfToMinusOne:
        os << "\tpos=" << s.pos;
        break;
      case StepKind::HenselRoot:
        os << "\tpos=" << s.pos << "\texp=" << s.exponent << "\troot=" << (s.root ? s.root->str() : "");
        break;
      case StepKind::SteinbergZero:
        break;
    }
    os << "\tterm=" << detail::term_str(s.term) << "\n";
  }
  os << "end\n";
  return os.str();
}

/// Parses certificate_str output; `field_name` receives the field line.
template <class E, class ParseEntry>
DivisibilityCertificate<E> parse_certificate(const std::string& text, ParseEntry parse_entry, std::string* field_name = nullptr) {
  auto bad = [](const std::string& why) -> void { fail(ErrorCode::ParseError, "certificate: " + why); };
  std::istringstream is(text);
  std::string line;
  DivisibilityCertificate<E> c;
  bool header = false, ended = false;
  int degree = -1;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != "certificate") bad("missing header");
      header = true;
      continue;
    }
    if (line == "end") {
      ended = true;
      break;
    }
    auto f = detail::split_tabs(line);
    const std::string& key = f[0];
    if (key == "field" && f.size() == 2) {
      if (field_name) *field_name = f[1];
    } else if (key == "divisor" && f.size() == 2) {
      c.divisor = std::stoll(f[1]);
    } else if (key == "target" && f.size() == 2) {
      c.target = parse_milnor<E>(f[1], parse_entry);
      degree = c.target.degree();
    } else if (key == "witness" && f.size() == 2) {
      c.witness = parse_milnor<E>(f[1], parse_entry);
    } else if (auto kind = step_from_name(key)) {
      if (degree < 0) bad("step before target");
      RewriteStep<E> s;
      s.kind = *kind;
      for (std::size_t i = 1; i < f.size(); ++i) {
        auto eq = f[i].find('=');
        if (eq == std::string::npos) bad("field without '=': " + f[i]);
        std::string k = f[i].substr(0, eq), v = f[i].substr(eq + 1);
        if (k == "k") {
          s.multiplicity = BigInt(v);
        } else if (k == "pos") {
          s.pos = std::stoul(v);
        } else if (k == "pos2") {
          s.pos2 = std::stoul(v);
        } else if (k == "exp") {
          s.exponent = std::stoll(v);
        } else if (k == "root") {
          s.root = parse_entry(v);
        } else if (k == "term") {
          auto cls = parse_milnor<E>("deg:" + std::to_string(degree) + " " + v, parse_entry);
          s.term = cls.single_term().first;
        } else if (k == "factors") {
          std::size_t start = 0;
          while (start < v.size()) {
            std::size_t semi = v.find(';', start);
            std::string item = v.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
            auto at = item.rfind('@');
            if (at == std::string::npos) bad("factor without exponent");
            s.factors.emplace_back(parse_entry(item.substr(0, at)), std::stoll(item.substr(at + 1)));
            if (semi == std::string::npos) break;
            start = semi + 1;
          }
        } else {
          bad("unknown field " + k);
        }
      }
      c.steps.push_back(std::move(s));
    } else {
      bad("unrecognized line: " + key);
    }
  }
  if (!ended) bad("missing end line");
  return c;
}

}  // namespace milnor
