#pragma once

#include <string_view>

#include "chernlab/polynomial.hpp"

namespace chernlab {

// Grammar (no implicit multiplication; "2*x", not "2x"):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := atom ('^' digits)?
//   atom    := digits | identifier | '(' expr ')'
//
// Integer literals are reduced mod p. Throws ParseError on unknown
// variables, malformed input, or a non-natural exponent.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace chernlab
