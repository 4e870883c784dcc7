#pragma once

#include <string>

#include "cpchart/errors.hpp"
#include "cpchart/expr.hpp"

namespace cpchart {

// Parses the expression grammar
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := atom ('^' integer)? | '-' factor
//   atom    := 'z'DIGITS | 'zb'DIGITS | constant-id | number | '(' expr ')'
//            | 'conj' '(' identifier ')'
//
// Numbers are decimal with an optional 'i' suffix (2, 0.5, 2i, 3i). A bare 'i'
// is the imaginary unit. conj(c) names the conjugate partner of a declared
// constant (and conj(z1) is zb1). Unknown identifiers and out-of-range
// coordinate indices are reported with their position.
Expr parse_expr(const std::string& text, const VarSetPtr& vars);

}  // namespace cpchart
