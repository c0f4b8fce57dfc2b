#pragma once

#include <string>
#include <string_view>

#include "isored/ratfun.hpp"

namespace isored {

// Weight-expression grammar (variable "l", "lambda" or "λ"; imaginary unit "i"):
//
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := ('-')? atom ('^' uint)?
//   atom     := rational | rational 'i' | 'i' | var | '(' expr ')'
//   rational := uint ('/' uint)? | decimal
//   var      := 'l' | 'lambda' | 'λ'
//
// A rational literal is read greedily, so "1/2i" is i/2 and "2/3^2" is 4/9.

/// Parses a weight expression into canonical form. Throws ParseError with the
/// byte offset of the problem.
RatFun parse_weight(std::string_view text);

/// Emits "num/den" with Gaussian-integer coefficients (common denominators and
/// integer content cleared), using "l" for lambda. The output re-parses to the
/// same canonical value.
std::string format_weight(const RatFun& w);

/// Polynomial rendering in the same grammar (used for characteristic
/// polynomials and annihilators); rational coefficients appear as "a/b".
std::string format_poly(const Poly& p);

}  // namespace isored
