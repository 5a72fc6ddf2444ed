#pragma once

#include <string>
#include <string_view>

#include "cfroots/polynomial.hpp"

namespace cfroots {

/// Largest exponent accepted by the expression parser.
inline constexpr unsigned long kMaxExponent = 1'000'000;

/// "a0,a1,...,ad" in ascending powers.
Polynomial parse_coefficients(std::string_view text);

/// Expression in x with integer literals, + - * ^ and parentheses, e.g.
/// "(x-1)*(x-2)" or "x^2 - 2". Juxtaposition such as "3x" multiplies.
Polynomial parse_expression(std::string_view text);

/// Picks coefficient-list form when the text has a comma and no x, otherwise
/// parses an expression.
Polynomial parse_polynomial(std::string_view text);

/// Canonical expression, e.g. "x^3 - 2*x + 5"; "0" for the zero polynomial.
std::string render(const Polynomial& a);

/// "a0,a1,...,ad".
std::string render_coefficients(const Polynomial& a);

}  // namespace cfroots
