#pragma once

#include <string_view>

#include "topdeg/polynomial.hpp"

namespace topdeg {

// Parses the expression grammar: rational/integer literals ("p/q"),
// identifiers naming ring variables, '+', '-', '*', '^', parentheses.
// No implicit multiplication.  Errors carry a 0-based column offset
// ("col N: ...") so the problem-file reader can add line context.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

} // namespace topdeg
