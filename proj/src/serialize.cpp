#include "milnor/serialize.hpp"

#include "milnor/error.hpp"
#include "milnor/numtheory.hpp"

#include <charconv>
#include <regex>
#include <vector>

namespace milnor {

namespace {

[[noreturn]] void bad(std::string_view s, const char* what) {
  fail(ErrorCode::ParseError, std::string(what) + ": '" + std::string(s) + "'");
}

std::int64_t to_int(std::string_view s, std::string_view whole) {
  std::string t = trim_copy(s);
  std::int64_t v = 0;
  const char* b = t.data();
  const char* e = t.data() + t.size();
  if (!t.empty() && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) bad(whole, "expected an integer");
  return v;
}

struct Header {
  std::string kind;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::string body;
};

Header split_header(std::string_view s) {
  static const std::regex re(R"(^\s*([a-z]+)\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*:\s*(.*?)\s*$)");
  std::string str(s);
  std::smatch m;
  if (!std::regex_match(str, m, re)) bad(s, "malformed element");
  return {m[1], to_int(m[2].str(), s), to_int(m[3].str(), s), m[4]};
}

}  // namespace

std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

FqElem parse_fq_short(const FiniteField& k, std::string_view s) {
  std::string t = trim_copy(s);
  if (t.rfind("g^", 0) == 0) return k.from_exponent(to_int(std::string_view(t).substr(2), s));
  if (t == "g") return k.generator();
  return k.from_int(to_int(t, s));
}

FqElem parse_ff(std::string_view s) {
  Header h = split_header(s);
  if (h.kind != "ff") bad(s, "expected ff(p,f):...");
  if (h.b < 1 || h.b > 62) bad(s, "bad extension degree");
  const FiniteField& k = FiniteField::get(h.a, static_cast<int>(h.b));
  if (h.body.rfind("g", 0) != 0 && k.degree() > 1 && h.body != "0") bad(s, "integer form is only valid over prime fields");
  return parse_fq_short(k, h.body);
}

PadicNumber parse_padic(std::string_view s) {
  Header h = split_header(s);
  if (h.kind != "padic") bad(s, "expected padic(p,N):...");
  if (!is_prime(h.a)) fail(ErrorCode::NotPrime, std::to_string(h.a) + " is not prime");
  const std::int64_t p = h.a;
  const int N = static_cast<int>(h.b);
  if (N < 1 || N > PadicNumber::max_precision(p)) fail(ErrorCode::PrecisionExhausted, "p-adic precision out of range");
  const std::string& body = h.body;
  if (body == "0") return PadicNumber::exact_zero(p, N);
  static const std::regex big_o(R"(^O\(\s*(\d+)\s*\^\s*(-?\d+)\s*\)$)");
  static const std::regex prod(R"(^(-?\d+)\s*\*\s*(\d+)\s*\^\s*(-?\d+)$)");
  std::smatch m;
  if (std::regex_match(body, m, big_o)) {
    if (to_int(m[1].str(), s) != p) bad(s, "prime mismatch in O(p^a)");
    return PadicNumber::zero_mod(p, static_cast<int>(to_int(m[2].str(), s)), N);
  }
  if (std::regex_match(body, m, prod)) {
    if (to_int(m[2].str(), s) != p) bad(s, "prime mismatch in u*p^k");
    const std::int64_t u = to_int(m[1].str(), s);
    if (u % p == 0) bad(s, "mantissa must be coprime to p");
    return PadicNumber::from_int(p, big(u), N).shift(static_cast<int>(to_int(m[3].str(), s)));
  }
  static const std::regex integer(R"(^-?\d+$)");
  if (std::regex_match(body, integer)) return PadicNumber::from_int(p, BigInt(body), N);
  bad(s, "malformed p-adic body");
}

LaurentSeries parse_laurent(std::string_view s) {
  Header h = split_header(s);
  if (h.kind != "laurent") bad(s, "expected laurent(q,N):...");
  const FiniteField& k = FiniteField::of_order(h.a);
  const int N = static_cast<int>(h.b);
  if (N < 1) fail(ErrorCode::PrecisionExhausted, "Laurent precision must be positive");
  const std::string& body = h.body;
  if (body == "0") return LaurentSeries::exact_zero(k, N);
  static const std::regex big_o(R"(^O\(\s*t\s*\^\s*(-?\d+)\s*\)$)");
  static const std::regex series(R"(^t\s*\^\s*(-?\d+)\s*\*\s*\((.*)\)$)");
  std::smatch m;
  if (std::regex_match(body, m, big_o)) return LaurentSeries::zero_mod(k, static_cast<int>(to_int(m[1].str(), s)), N);
  if (!std::regex_match(body, m, series)) bad(s, "malformed Laurent body");
  const int v = static_cast<int>(to_int(m[1].str(), s));
  std::vector<FqElem> cs;
  std::string list = m[2];
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string::npos) comma = list.size();
    cs.push_back(parse_fq_short(k, std::string_view(list).substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (cs.empty() || cs[0].is_zero()) bad(s, "leading coefficient must be nonzero");
  return LaurentSeries::from_coeffs(k, v, std::move(cs));
}

AnyElement parse_element(std::string_view s) {
  std::string t = trim_copy(s);
  if (t.rfind("ff(", 0) == 0) return parse_ff(t);
  if (t.rfind("padic(", 0) == 0) return parse_padic(t);
  if (t.rfind("laurent(", 0) == 0) return parse_laurent(t);
  bad(s, "unknown element syntax");
}

}  // namespace milnor
