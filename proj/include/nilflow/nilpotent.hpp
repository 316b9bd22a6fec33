#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilflow/polynomial.hpp"
#include "nilflow/vector_field.hpp"

namespace nilflow {

inline constexpr unsigned kDefaultMaxDepth = 16;

// Descendants of an observable g under a derivation: [g, Vg, V^2 g, ...],
// ending at the first level the derivation kills. index is the number of
// levels, i.e. the nilpotency index of g.
struct Tower {
    std::vector<Polynomial> levels;
    unsigned index = 0;
    const Polynomial& generator() const { return levels.front(); }
    const Polynomial& bottom() const { return levels.back(); }
};

// Coefficients of the observable composed with the flow:
// g(flow_t) = sum_j coefficients[j] * t^j / j!, with coefficients[j] = V^j g.
// The sum terminates because the generator is nilpotent for the field.
struct FlowPolynomial {
    std::string label;
    std::vector<Polynomial> coefficients;

    Rational evaluate(std::span<const Rational> point, const Rational& t) const;
    std::string to_string(const std::string& time_symbol = "t") const;
};

struct NilpotencyReport {
    struct Entry {
        std::string coordinate;
        std::optional<unsigned> index;  // empty: not nilpotent within max_depth
        std::optional<FlowPolynomial> flow;
    };
    std::vector<Entry> entries;
    bool strict = false;  // every coordinate nilpotent within max_depth
    unsigned max_depth = kDefaultMaxDepth;
};

// Empty result means V^max_depth(g) != 0 (not nilpotent within the depth
// bound; the bound is reported, non-nilpotency is never silently truncated).
// max_depth must be >= 1.
std::optional<Tower> compute_tower(const VectorField& v, const Polynomial& g,
                                   unsigned max_depth = kDefaultMaxDepth);

std::optional<FlowPolynomial> flow_polynomial(const VectorField& v, const Polynomial& g,
                                              unsigned max_depth = kDefaultMaxDepth);

// Applies compute_tower to every coordinate function; strict iff all of them
// are nilpotent within max_depth.
NilpotencyReport strict_integrability_report(const VectorField& v,
                                             unsigned max_depth = kDefaultMaxDepth);

// All monomials of total degree <= degree_bound, in graded-lex order.
std::vector<Exponents> monomials_up_to_degree(std::size_t coord_count, unsigned degree_bound);

// Exact basis of { p : deg p <= degree_bound, V^k p = 0 }, computed as the
// nullspace of the linear map p -> V^k p on the monomial coefficient space
// (fraction-free elimination).
std::vector<Polynomial> filtration_basis(const VectorField& v, unsigned k,
                                         unsigned degree_bound);

}  // namespace nilflow
