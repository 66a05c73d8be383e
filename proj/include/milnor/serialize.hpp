#pragma once

#include "milnor/finite_field.hpp"
#include "milnor/laurent.hpp"
#include "milnor/padic.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace milnor {

/// "ff(p,f):g^e", "ff(p,f):0", or an integer after the colon for f = 1.
FqElem parse_ff(std::string_view s);
/// Short form inside a known field: "0", "g^e", or an integer (reduced mod p).
FqElem parse_fq_short(const FiniteField& k, std::string_view s);
/// "padic(p,N):u*p^k", "padic(p,N):0", "padic(p,N):O(p^a)", or an integer after the colon.
PadicNumber parse_padic(std::string_view s);
/// "laurent(q,N):t^k*(c0,...)", "laurent(q,N):0", "laurent(q,N):O(t^a)".
LaurentSeries parse_laurent(std::string_view s);

using AnyElement = std::variant<FqElem, PadicNumber, LaurentSeries>;
AnyElement parse_element(std::string_view s);

std::string trim_copy(std::string_view s);

}  // namespace milnor
