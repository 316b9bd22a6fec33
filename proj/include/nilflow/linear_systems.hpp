#pragma once

#include <optional>
#include <vector>

#include "nilflow/rational_linalg.hpp"
#include "nilflow/univariate.hpp"
#include "nilflow/vector_field.hpp"

namespace nilflow {

// The linear dynamics attached to a square matrix A: the field whose j-th
// component is sum_i A(j, i) x_i, so coordinates evolve by x(t) = exp(tA) x0.
// Sign convention (fixed here once, enforced by a dedicated test):
//   lie_bracket(field(A), field(B)) == field(B*A - A*B).
VectorField linear_vector_field(const RationalMatrix& a);
VectorField linear_vector_field(const RationalMatrix& a, std::vector<std::string> coords);

// Basis of { B : B*A == A*B for every A in s }, as the exact nullspace of the
// stacked commutator operators on the n*n matrix space. An empty set commutes
// with everything: the full matrix space is returned.
std::vector<RationalMatrix> commutant(const std::vector<RationalMatrix>& s, std::size_t n);

// Iterated commutants of s inside the full matrix algebra. dims lists the
// subspace dimensions of s', s'', ...; the stabilization flags verify the
// first commutant equals the third and the second equals the fourth as exact
// subspace equalities.
struct CommutantChain {
    std::vector<std::vector<RationalMatrix>> bases;
    std::vector<std::size_t> dims;
    bool first_stable = false;   // s' == s'''
    bool second_stable = false;  // s'' == s''''
};
CommutantChain commutant_chain(const std::vector<RationalMatrix>& s, std::size_t n,
                               unsigned depth);

// Exact semisimple + nilpotent split: a = s + n, s*n = n*s, n nilpotent and
// the minimal polynomial of s squarefree. Computed over the rationals by the
// Newton iteration toward the squarefree part of the characteristic
// polynomial; no eigenvalues are ever needed.
struct JordanChevalley {
    RationalMatrix semisimple;
    RationalMatrix nilpotent;
};
JordanChevalley jordan_chevalley(const RationalMatrix& a);

// Characteristic polynomial (monic) by the Faddeev-LeVerrier recursion.
UnivariatePoly characteristic_polynomial(const RationalMatrix& a);

// Minimal polynomial (monic): least-degree dependency among I, A, A^2, ...
UnivariatePoly minimal_polynomial(const RationalMatrix& a);

// Smallest k with A^k == 0, or nullopt if A is not nilpotent.
std::optional<unsigned> nilpotency_index(const RationalMatrix& a);

// Exact exp(t*A) for nilpotent A: the exponential series truncates at the
// nilpotency index. Throws NotNilpotentError otherwise.
RationalMatrix nilpotent_matrix_flow(const RationalMatrix& a, const Rational& t);

// Subspace helpers on matrix lists (row-major vectorization).
std::vector<std::vector<Rational>> vectorize(const std::vector<RationalMatrix>& mats);
bool matrix_span_equal(const std::vector<RationalMatrix>& a,
                       const std::vector<RationalMatrix>& b);
bool matrix_span_contains(const std::vector<RationalMatrix>& big,
                          const std::vector<RationalMatrix>& small);
bool all_commute(const std::vector<RationalMatrix>& mats);

}  // namespace nilflow
