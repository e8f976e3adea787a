#pragma once

#include <string>
#include <string_view>

#include "qwa/laurent.hpp"

namespace qwa {

// Text form of ground-field and Laurent values.
//
//   scalar  := poly | poly "/" poly
//   poly    := ["+"|"-"] term (("+"|"-") term)*
//   term    := [rational] ("*"? atom)*
//   atom    := "q" ["^" integer] | "z" ["^" integer] | "h" ["^" integer]
//            | "(" poly ")"
//   rational:= integer ["/" positive-integer]
//
// `z` denotes zeta_L; `h` is only admitted in Laurent literals. Whitespace is
// insignificant. Parsing is exact; bad input raises ParseError with the
// offending position.

Scalar parse_scalar(std::string_view text, const ScalarFieldPtr& field);
// Univariate Laurent polynomial in h.
LaurentPoly parse_laurent1(std::string_view text, const ScalarFieldPtr& field);

// Canonical printers; parse(print(x)) == x and the output is deterministic.
std::string to_literal(const Scalar& s);
std::string to_literal1(const LaurentPoly& p);

}  // namespace qwa
