#pragma once

#include "esdef/poly.hpp"

#include <string_view>

namespace esdef {

/// Parses a polynomial in x and y with rational coefficients. Accepts the
/// short notation "2xy5" (digits after a variable are its exponent), rational
/// literals such as "3/10x", the operators + - * ^ and parentheses.
/// The grammar is written out in docs/grammar.ebnf.
LocalPoly parse_poly(std::string_view text);

}  // namespace esdef
