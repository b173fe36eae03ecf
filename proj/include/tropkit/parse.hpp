#pragma once

#include <map>
#include <string_view>
#include <utility>

#include "tropkit/rational.hpp"

namespace tropkit {

// Exponent (i, j) of the monomial x^i y^j.
using Monomial = std::pair<int, int>;

// Parses tropical polynomial text such as "0 + x + (-1)*x^2" or
// "3+2x+2y+3xy+y^2+x^2". Coefficients are integers, decimals or p/q,
// optionally parenthesised; a bare monomial has coefficient 0 (the
// multiplicative identity); a coefficient of -inf drops the term. Repeated
// monomials combine by max. Throws ParseError.
std::map<Monomial, Rational> parse_polynomial_terms(std::string_view text, bool allow_y);

// Inverse of parse_polynomial_terms, terms ordered by (j, i).
std::string format_polynomial_terms(const std::map<Monomial, Rational>& terms);

}  // namespace tropkit
