#pragma once

#include <string>
#include <vector>

#include "nilflow/rational.hpp"
#include "nilflow/rational_linalg.hpp"

namespace nilflow {

// Dense univariate polynomial over the rationals, ascending coefficients.
// Supports the exact polynomial arithmetic needed for characteristic and
// minimal polynomials: gcd, exact division, derivative, matrix evaluation.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coeffs);
    static UnivariatePoly constant(const Rational& c);
    static UnivariatePoly x();

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational leading() const;

    UnivariatePoly operator+(const UnivariatePoly& rhs) const;
    UnivariatePoly operator-(const UnivariatePoly& rhs) const;
    UnivariatePoly operator*(const UnivariatePoly& rhs) const;
    UnivariatePoly operator*(const Rational& scalar) const;
    bool operator==(const UnivariatePoly& rhs) const;

    UnivariatePoly derivative() const;
    UnivariatePoly monic() const;

    // quotient and remainder; rhs must be nonzero
    std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& rhs) const;

    Rational operator()(const Rational& x) const;
    RationalMatrix operator()(const RationalMatrix& m) const;

    std::string to_string(const std::string& symbol = "x") const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

// Monic greatest common divisor (Euclid over the rationals).
UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b);

// Extended Euclid: returns (u, v) with u*a + v*b = gcd(a, b) monic.
struct BezoutPair {
    UnivariatePoly u, v, gcd;
};
BezoutPair poly_extended_gcd(const UnivariatePoly& a, const UnivariatePoly& b);

// p / gcd(p, p'): same roots, all simple.
UnivariatePoly squarefree_part(const UnivariatePoly& p);

}  // namespace nilflow
