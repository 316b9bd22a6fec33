#pragma once

#include <string>
#include <vector>

#include "nilflow/polynomial.hpp"

namespace nilflow {

// Parses the polynomial text syntax used by spec files: a sum of terms such
// as "1/2*v^2 - 3*x*a + 4". Rationals are written p/q (or as decimals);
// exponents with '^'. Throws ParseError with the offending position, or
// UnknownCoordinateError for names outside the coordinate system.
Polynomial parse_polynomial(const std::string& text, std::vector<std::string> coords);

}  // namespace nilflow
