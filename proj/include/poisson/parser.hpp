#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poisson/polynomial.hpp"

namespace poisson {

// Grammar (whitespace between tokens is ignored):
//   expr     := ['-'] term { ('+' | '-') term }
//   term     := factor { '*' factor }
//   factor   := atom [ '^' nat ]
//   atom     := rational | var | '(' expr ')'
//   rational := nat [ '/' nat ]
// Implicit multiplication such as "2x" is a syntax error.
Polynomial parse_poly(std::string_view text, std::span<const std::string> var_names);

// Canonical text: terms in GradedLexOrder, coefficients as num/den, unit coefficients
// omitted. parse_poly(to_string(p, names), names) == p.
std::string to_string(const Polynomial& p, std::span<const std::string> var_names);

// x1, ..., xn
std::vector<std::string> default_var_names(std::size_t n);

// Throws DimensionError / std::invalid_argument when names are malformed or repeated.
void validate_var_names(std::span<const std::string> var_names);

} // namespace poisson
