#pragma once

#include "milnor/bigint.hpp"
#include "milnor/element_traits.hpp"
#include "milnor/error.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace milnor {

/// Formal Z-linear combination of degree-n symbols {x_1,...,x_n}, kept
/// sorted and merged. Equality is formal; classes are compared in K^M only
/// through homomorphic images (ff coordinates, residue vectors, ...).
template <class E>
class MilnorClass {
 public:
  using Entries = std::vector<E>;
  using TermMap = std::map<Entries, BigInt>;

  explicit MilnorClass(int degree = 0) : degree_(degree) {
    if (degree < 0) fail(ErrorCode::InvalidArgument, "negative symbol degree");
  }

  static MilnorClass symbol(Entries entries) {
    MilnorClass c(static_cast<int>(entries.size()));
    c.add_term(entries, 1);
    return c;
  }
  static MilnorClass integer(const BigInt& n) {
    MilnorClass c(0);
    c.add_term({}, n);
    return c;
  }

  int degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const Entries& e, const BigInt& c) {
    if (static_cast<int>(e.size()) != degree_) fail(ErrorCode::InvalidArgument, "term degree differs from class degree");
    for (const E& x : e) {
      if (x.is_zero()) fail(ErrorCode::ZeroEntry, "symbol entries must be nonzero");
      check_context(x);
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// The unique term of a single-term class.
  std::pair<Entries, BigInt> single_term() const {
    if (terms_.size() != 1) fail(ErrorCode::InvalidArgument, "expected a single-term class");
    return *terms_.begin();
  }

  MilnorClass operator+(const MilnorClass& o) const {
    check_degree(o);
    MilnorClass r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MilnorClass operator-() const {
    MilnorClass r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MilnorClass operator-(const MilnorClass& o) const { return *this + (-o); }
  MilnorClass& operator+=(const MilnorClass& o) { return *this = *this + o; }
  MilnorClass& operator-=(const MilnorClass& o) { return *this = *this - o; }
  MilnorClass scaled(const BigInt& k) const {
    MilnorClass r(degree_);
    if (k == 0) return r;
    r = *this;
    for (auto& [e, c] : r.terms_) c *= k;
    return r;
  }

  bool operator==(const MilnorClass& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

  /// "deg:n {e1,e2} + 3*{...} - {...}"; "deg:n 0" for the empty sum.
  std::string str() const {
    std::string s = "deg:" + std::to_string(degree_) + " ";
    if (terms_.empty()) return s + "0";
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt a = abs(c);
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      if (degree_ == 0) {
        s += a.get_str();
        continue;
      }
      if (a != 1) s += a.get_str() + "*";
      s += "{";
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += e[i].str();
      }
      s += "}";
    }
    return s;
  }

 private:
  void check_degree(const MilnorClass& o) const {
    if (degree_ != o.degree_) fail(ErrorCode::InvalidArgument, "adding classes of different degrees");
  }
  void check_context(const E& x) {
    if (!witness_) {
      witness_ = x;
    } else if (!same_context(*witness_, x)) {
      fail(ErrorCode::ContextMismatch, "symbol entries from different fields");
    }
  }

  int degree_ = 0;
  TermMap terms_;
  std::optional<E> witness_;
};

/// Graded product: bilinear concatenation.
template <class E>
MilnorClass<E> product(const MilnorClass<E>& a, const MilnorClass<E>& b) {
  MilnorClass<E> r(a.degree() + b.degree());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      auto e = ea;
      e.insert(e.end(), eb.begin(), eb.end());
      r.add_term(e, ca * cb);
    }
  return r;
}

/// Splits the entry at `position` of a single-term class as y * z.
template <class E>
MilnorClass<E> expand_entry(const MilnorClass<E>& a, std::size_t position, const E& y, const E& z) {
  auto [e, c] = a.single_term();
  if (position >= e.size()) fail(ErrorCode::BadPosition, "position outside the symbol");
  if (y.is_zero() || z.is_zero()) fail(ErrorCode::ZeroEntry, "factors must be nonzero");
  if (!matches(y * z, e[position])) fail(ErrorCode::FactorizationMismatch, "y*z differs from the entry");
  MilnorClass<E> r(a.degree());
  auto e1 = e, e2 = e;
  e1[position] = y;
  e2[position] = z;
  r.add_term(e1, c);
  r.add_term(e2, c);
  return r;
}

/// Transposes entries i and j; any transposition is odd, so the sign flips.
template <class E>
MilnorClass<E> swap(const MilnorClass<E>& a, std::size_t i, std::size_t j) {
  auto [e, c] = a.single_term();
  if (i == j || i >= e.size() || j >= e.size()) fail(ErrorCode::BadPosition, "swap needs two distinct valid positions");
  std::swap(e[i], e[j]);
  MilnorClass<E> r(a.degree());
  r.add_term(e, -c);
  return r;
}

template <class E>
std::optional<std::pair<std::size_t, std::size_t>> steinberg_pair(const std::vector<E>& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (matches(e[i] + e[j], e[i].one())) return std::make_pair(i, j);
  return std::nullopt;
}

template <class E>
bool is_steinberg_relator(const std::vector<E>& e) {
  return steinberg_pair(e).has_value();
}

enum class Identity { MinusSelf, SelfToMinusOne };

/// {.., x, -x, ..} -> 0 and {.., x, x, ..} -> {.., x, -1, ..} at positions (position, position+1).
template <class E>
MilnorClass<E> apply_identity(const MilnorClass<E>& a, Identity rule, std::size_t position) {
  auto [e, c] = a.single_term();
  if (position + 1 >= e.size()) fail(ErrorCode::BadPosition, "identity needs two adjacent entries");
  const E& x = e[position];
  const E& y = e[position + 1];
  if (rule == Identity::MinusSelf) {
    if (!matches(y, -x)) fail(ErrorCode::PatternMismatch, "entries are not of the form (x, -x)");
    return MilnorClass<E>(a.degree());
  }
  if (!matches(y, x)) fail(ErrorCode::PatternMismatch, "entries are not of the form (x, x)");
  e[position + 1] = minus_one(x);
  MilnorClass<E> r(a.degree());
  r.add_term(e, c);
  return r;
}

/// Inverse of MilnorClass::str given an entry parser.
template <class E, class ParseEntry>
MilnorClass<E> parse_milnor(std::string_view s, ParseEntry parse_entry) {
  auto bad = [&](const char* what) -> void {
    fail(ErrorCode::ParseError, std::string(what) + ": '" + std::string(s) + "'");
  };
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  };
  skip();
  if (s.substr(pos, 4) != "deg:") bad("missing deg: prefix");
  pos += 4;
  std::size_t end = pos;
  while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
  if (end == pos) bad("missing degree");
  const int degree = std::stoi(std::string(s.substr(pos, end - pos)));
  pos = end;
  MilnorClass<E> out(degree);
  skip();
  if (s.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos >= s.size()) break;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      bad("expected + or - between terms");
    }
    first = false;
    BigInt coeff = 1;
    std::size_t num_end = pos;
    while (num_end < s.size() && std::isdigit(static_cast<unsigned char>(s[num_end]))) ++num_end;
    if (num_end > pos) {
      coeff = BigInt(std::string(s.substr(pos, num_end - pos)));
      pos = num_end;
      skip();
      if (degree == 0) {
        out.add_term({}, sign * coeff);
        continue;
      }
      if (pos >= s.size() || s[pos] != '*') bad("expected * after coefficient");
      ++pos;
      skip();
    }
    if (pos >= s.size() || s[pos] != '{') bad("expected {");
    ++pos;
    std::vector<E> entries;
    int depth = 0;
    std::size_t start = pos;
    for (; pos < s.size(); ++pos) {
      char ch = s[pos];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && (ch == ',' || ch == '}')) {
        if (pos > start) entries.push_back(parse_entry(s.substr(start, pos - start)));
        start = pos + 1;
        if (ch == '}') break;
      }
    }
    if (pos >= s.size()) bad("unterminated symbol");
    ++pos;
    if (static_cast<int>(entries.size()) != degree) bad("symbol length differs from degree");
    out.add_term(entries, sign * coeff);
  }
  return out;
}

}  // namespace milnor
