#pragma once

#include <string>
#include <string_view>

#include "adjoint/poly.hpp"

namespace adjoint {

/// Parses the polynomial grammar
///
///     expr   := ['-'] term (('+' | '-') term)*
///     term   := coeff | [coeff] factor+
///     factor := ('x' | 'y') ['^' uint]
///
/// where '*' may separate a coefficient and factors, whitespace is ignored and
/// coefficients reduce mod p. A term whose degree exceeds `cap` is rejected
/// with ParseError rather than truncated.
TruncatedPoly parse_poly(std::string_view text, PrimeField field, int cap);

/// Canonical text: terms in degree-then-lex order joined by " + ", coefficients
/// in [1, p) printed only when not 1, letter runs as powers ("2*x^2*y*x").
std::string format_poly(const TruncatedPoly& a);

std::string format_word(Word w);

} // namespace adjoint
