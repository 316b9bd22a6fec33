#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nilflow/rational.hpp"

namespace nilflow {

// Exponent vector of a monomial; entry i is the power of coordinate i.
using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, ties broken lexicographically.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients over a
// named coordinate system. Values are canonical: no stored zero terms, and
// two polynomials over the same coordinates compare equal iff their term
// maps do. All operations are pure; instances are safe to share.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> coords);

    static Polynomial zero(std::vector<std::string> coords);
    static Polynomial constant(std::vector<std::string> coords, const Rational& value);
    static Polynomial variable(std::vector<std::string> coords, std::size_t index);
    static Polynomial variable(std::vector<std::string> coords, const std::string& name);
    static Polynomial monomial(std::vector<std::string> coords, Exponents exps,
                               const Rational& coef);

    const std::vector<std::string>& coords() const { return coords_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    Rational coefficient(const Exponents& exps) const;
    Rational constant_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& scalar) const;
    Polynomial pow(unsigned exp) const;

    bool operator==(const Polynomial& rhs) const;

    Polynomial partial(std::size_t coord_index) const;

    Rational evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

    // Embeds the polynomial into a larger coordinate system that must contain
    // every current coordinate name.
    Polynomial extended_to(std::vector<std::string> new_coords) const;

    std::string to_string() const;

    std::size_t coord_index(const std::string& name) const;  // throws UnknownCoordinateError

private:
    std::vector<std::string> coords_;
    TermMap terms_;

    void add_term(const Exponents& exps, const Rational& coef);
    friend class VectorField;
};

Polynomial operator*(const Rational& scalar, const Polynomial& p);

void require_same_coords(const Polynomial& a, const Polynomial& b);

}  // namespace nilflow
