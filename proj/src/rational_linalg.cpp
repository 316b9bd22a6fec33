#include "nilflow/rational_linalg.hpp"

#include <sstream>

#include "nilflow/errors.hpp"

namespace nilflow {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return {};
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw DimensionMismatchError("ragged row list");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatchError("matrix addition shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatchError("matrix subtraction shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatchError("matrix product shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& scalar) const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Rational RationalMatrix::trace() const {
    if (!is_square()) throw DimensionMismatchError("trace of non-square matrix");
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << nilflow::to_string(at(i, j));
        }
        out << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
    return a * b - b * a;
}

namespace {

struct Echelon {
    std::vector<std::vector<BigInt>> rows;  // fraction-free row echelon form
    std::vector<std::size_t> pivot_cols;    // pivot column of rows[0..r)
    std::size_t cols = 0;
};

// Fraction-free (Bareiss) elimination to row echelon form. Denominators are
// cleared row-by-row first, so every intermediate entry stays an exact
// integer; rank decisions are exact.
Echelon echelon_form(const RationalMatrix& m) {
    Echelon e;
    e.cols = m.cols();
    e.rows.assign(m.rows(), std::vector<BigInt>(m.cols(), BigInt(0)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt scale(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m.at(i, j) * Rational(scale);
            e.rows[i][j] = v.get_num();  // denominator is 1 after scaling
        }
    }

    BigInt prev(1);
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < e.cols && pivot_row < e.rows.size(); ++col) {
        // pick the nonzero entry of smallest magnitude to damp growth
        std::size_t best = e.rows.size();
        for (std::size_t i = pivot_row; i < e.rows.size(); ++i) {
            if (e.rows[i][col] == 0) continue;
            if (best == e.rows.size() ||
                mpz_cmpabs(e.rows[i][col].get_mpz_t(), e.rows[best][col].get_mpz_t()) < 0)
                best = i;
        }
        if (best == e.rows.size()) continue;  // free column
        std::swap(e.rows[pivot_row], e.rows[best]);

        const BigInt pivot = e.rows[pivot_row][col];
        for (std::size_t i = pivot_row + 1; i < e.rows.size(); ++i) {
            const BigInt factor = e.rows[i][col];
            for (std::size_t j = col + 1; j < e.cols; ++j) {
                BigInt v = pivot * e.rows[i][j] - factor * e.rows[pivot_row][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                e.rows[i][j] = v;
            }
            e.rows[i][col] = 0;
        }
        prev = pivot;
        e.pivot_cols.push_back(col);
        ++pivot_row;
    }
    e.rows.resize(e.pivot_cols.size());
    return e;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return echelon_form(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    const Echelon e = echelon_form(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> x(n, Rational(0));
        x[free_col] = 1;
        for (std::size_t ri = e.pivot_cols.size(); ri-- > 0;) {
            const std::size_t pc = e.pivot_cols[ri];
            Rational acc(0);
            for (std::size_t j = pc + 1; j < n; ++j) {
                if (x[j] == 0) continue;
                acc += Rational(e.rows[ri][j]) * x[j];
            }
            x[pc] = -acc / Rational(e.rows[ri][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.is_square()) throw DimensionMismatchError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a.at(p, col) == 0) ++p;
        if (p == n) throw Error("matrix is singular");
        if (p != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(p, j), a.at(col, j));
                std::swap(inv.at(p, j), inv.at(col, j));
            }
        const Rational d = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            const Rational f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::size_t rank_of_span(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return 0;
    return rank(RationalMatrix::from_rows(vectors));
}

bool subspace_contains(const std::vector<std::vector<Rational>>& haystack,
                       const std::vector<std::vector<Rational>>& needles) {
    if (needles.empty()) return true;
    if (haystack.empty()) {
        for (const auto& v : needles)
            for (const auto& x : v)
                if (x != 0) return false;
        return true;
    }
    std::vector<std::vector<Rational>> stacked = haystack;
    stacked.insert(stacked.end(), needles.begin(), needles.end());
    return rank_of_span(stacked) == rank_of_span(haystack);
}

bool subspace_equal(const std::vector<std::vector<Rational>>& a,
                    const std::vector<std::vector<Rational>>& b) {
    return rank_of_span(a) == rank_of_span(b) && subspace_contains(a, b);
}

}  // namespace nilflow
