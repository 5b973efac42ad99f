#pragma once

#include <string_view>
#include <vector>

#include "unbendable/rational_function.hpp"

namespace unbendable {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | '+' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')' | 'd/d' identifier (fields only)
// Integer literals divided by integer literals give rationals p/q.

RationalFunction parse_rational_function(std::string_view text, const Ring& ring);

/// Throws ParseError when the expression does not reduce to a polynomial.
Poly parse_polynomial(std::string_view text, const Ring& ring);

/// Parses a vector field such as "d/dx + p*d/dy + q^2*d/dz" into one
/// component per ring variable.
std::vector<RationalFunction> parse_vector_field(std::string_view text, const Ring& ring);

}  // namespace unbendable
