#pragma once

#include <string>

#include "ixmult/polynomial.hpp"

namespace ixm {

// Parses a polynomial expression: rational literals ("3", "1/2"), ring
// variables, +, -, *, ^, parentheses. Implicit multiplication is a syntax
// error; whitespace is insignificant. Errors carry line/column positions
// (offset by `line0`/`col0` so script files can report real locations).
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                            int line0 = 1, int col0 = 1);

// "n" or "n/d" with optional sign; rejects trailing garbage.
Rational parse_rational(const std::string& text);

}  // namespace ixm
