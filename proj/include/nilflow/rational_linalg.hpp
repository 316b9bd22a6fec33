#pragma once

#include <cstddef>
#include <vector>

#include "nilflow/rational.hpp"

namespace nilflow {

// Dense matrix with exact rational entries.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator*(const Rational& scalar) const;
    bool operator==(const RationalMatrix& rhs) const;

    RationalMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    std::vector<Rational> row_major() const { return data_; }
    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

// Exact rank via fraction-free (Bareiss) Gaussian elimination.
std::size_t rank(const RationalMatrix& m);

// Basis of { x : M x = 0 }, exact. Rows are eliminated fraction-free over the
// integers after clearing denominators; basis vectors come from rational
// back-substitution, one per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Inverse by Gauss-Jordan over the rationals; throws on singular input.
RationalMatrix inverse(const RationalMatrix& m);

// --- subspaces of a coefficient space, represented by spanning vectors ---

std::size_t rank_of_span(const std::vector<std::vector<Rational>>& vectors);
bool subspace_contains(const std::vector<std::vector<Rational>>& haystack,
                       const std::vector<std::vector<Rational>>& needles);
bool subspace_equal(const std::vector<std::vector<Rational>>& a,
                    const std::vector<std::vector<Rational>>& b);

}  // namespace nilflow
