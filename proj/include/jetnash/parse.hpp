#pragma once

#include <string_view>

#include "jetnash/polynomial.hpp"

namespace jetnash {

/// Parses a polynomial in the textual grammar
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-')* power
///   power  := atom ('^' INT)?
///   atom   := INT ('/' INT)? | VARIABLE | '(' expr ')'
///
/// VARIABLE is a base name optionally followed by `_<jet index>`. Whitespace
/// is insignificant and implicit multiplication is rejected. Throws
/// ParseError with the offending position.
Polynomial parsePolynomial(std::string_view text, const RingPtr& ring);

}  // namespace jetnash
