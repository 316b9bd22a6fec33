#pragma once

#include <gmpxx.h>

#include <string>

namespace nilflow {

// Exact rational scalar. Arbitrary-precision integers in numerator and
// denominator; every arithmetic result is kept canonical by GMP.
using Rational = mpq_class;
using BigInt = mpz_class;

// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p", "p/q" and plain decimals like "-1.25". Throws ParseError.
Rational rational_from_string(const std::string& text);

double to_double(const Rational& r);

Rational rational_pow(const Rational& base, unsigned exp);

Rational factorial(unsigned n);

}  // namespace nilflow
