#include "nilflow/linear_systems.hpp"

#include "nilflow/errors.hpp"

namespace nilflow {

VectorField linear_vector_field(const RationalMatrix& a) {
    std::vector<std::string> coords;
    for (std::size_t i = 1; i <= a.rows(); ++i) coords.push_back("x" + std::to_string(i));
    return linear_vector_field(a, std::move(coords));
}

VectorField linear_vector_field(const RationalMatrix& a, std::vector<std::string> coords) {
    if (!a.is_square()) throw DimensionMismatchError("linear field needs a square matrix");
    if (coords.size() != a.rows())
        throw DimensionMismatchError("coordinate count != matrix size");
    std::vector<Polynomial> comps;
    comps.reserve(a.rows());
    for (std::size_t j = 0; j < a.rows(); ++j) {
        Polynomial c = Polynomial::zero(coords);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            if (a.at(j, i) == 0) continue;
            c = c + Polynomial::variable(coords, i) * a.at(j, i);
        }
        comps.push_back(std::move(c));
    }
    return VectorField(std::move(coords), std::move(comps));
}

std::vector<RationalMatrix> commutant(const std::vector<RationalMatrix>& s, std::size_t n) {
    for (const auto& a : s)
        if (a.rows() != n || a.cols() != n)
            throw DimensionMismatchError("commutant: matrices must all be n x n");

    std::vector<RationalMatrix> basis;
    if (s.empty()) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                RationalMatrix e(n, n);
                e.at(p, q) = 1;
                basis.push_back(std::move(e));
            }
        return basis;
    }

    // Row per entry of [B, A] for each A; column per unknown entry B(p, q).
    RationalMatrix op(s.size() * n * n, n * n);
    std::size_t row = 0;
    for (const auto& a : s) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c, ++row) {
                // (B*A - A*B)(r, c): coefficient of B(p, q)
                for (std::size_t q = 0; q < n; ++q) op.at(row, r * n + q) += a.at(q, c);
                for (std::size_t p = 0; p < n; ++p) op.at(row, p * n + c) -= a.at(r, p);
            }
    }

    for (const auto& vec : nullspace(op)) {
        RationalMatrix b(n, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) b.at(p, q) = vec[p * n + q];
        basis.push_back(std::move(b));
    }
    return basis;
}

CommutantChain commutant_chain(const std::vector<RationalMatrix>& s, std::size_t n,
                               unsigned depth) {
    if (depth < 2) throw Error("commutant_chain: depth must be >= 2");
    CommutantChain chain;
    const unsigned steps = std::max(depth, 4u);
    std::vector<RationalMatrix> current = s;
    for (unsigned k = 0; k < steps; ++k) {
        current = commutant(current, n);
        chain.bases.push_back(current);
    }
    chain.first_stable = matrix_span_equal(chain.bases[0], chain.bases[2]);
    chain.second_stable = matrix_span_equal(chain.bases[1], chain.bases[3]);
    for (unsigned k = 0; k < depth; ++k) chain.dims.push_back(chain.bases[k].size());
    return chain;
}

UnivariatePoly characteristic_polynomial(const RationalMatrix& a) {
    if (!a.is_square()) throw DimensionMismatchError("charpoly of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    RationalMatrix b = RationalMatrix::identity(n);  // B_0
    for (std::size_t k = 1; k <= n; ++k) {
        const RationalMatrix ab = a * b;
        const Rational c = -ab.trace() / Rational(k);
        coeffs[n - k] = c;
        b = ab + RationalMatrix::identity(n) * c;
    }
    return UnivariatePoly(std::move(coeffs));
}

UnivariatePoly minimal_polynomial(const RationalMatrix& a) {
    if (!a.is_square()) throw DimensionMismatchError("minpoly of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<RationalMatrix> powers{RationalMatrix::identity(n)};
    for (std::size_t d = 1; d <= n; ++d) {
        powers.push_back(powers.back() * a);
        // columns: coefficients of I, A, ..., A^d; rows: matrix entries
        RationalMatrix stack(n * n, d + 1);
        for (std::size_t j = 0; j <= d; ++j)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    stack.at(r * n + c, j) = powers[j].at(r, c);
        const auto kernel = nullspace(stack);
        if (kernel.empty()) continue;
        // least-degree dependency: the top coefficient cannot vanish
        std::vector<Rational> coeffs = kernel.front();
        if (coeffs.back() == 0) throw Error("minimal_polynomial: degenerate kernel");
        return UnivariatePoly(std::move(coeffs)).monic();
    }
    throw Error("minimal_polynomial: no dependency up to dimension (unreachable)");
}

JordanChevalley jordan_chevalley(const RationalMatrix& a) {
    const UnivariatePoly p = characteristic_polynomial(a);
    const UnivariatePoly f = squarefree_part(p);
    const auto bezout = poly_extended_gcd(f, f.derivative());
    // gcd(f, f') = 1 since f is squarefree, so bezout.v inverts f' modulo f
    RationalMatrix s = a;
    for (int iter = 0; iter < 64; ++iter) {
        const RationalMatrix fs = f(s);
        if (fs.is_zero()) {
            JordanChevalley out;
            out.semisimple = s;
            out.nilpotent = a - s;
            return out;
        }
        s = s - fs * bezout.v(s);
    }
    throw Error("jordan_chevalley: Newton iteration failed to terminate");
}

std::optional<unsigned> nilpotency_index(const RationalMatrix& a) {
    if (!a.is_square()) throw DimensionMismatchError("nilpotency_index of non-square matrix");
    if (a.is_zero()) return 1;
    RationalMatrix power = a;
    for (unsigned k = 1; k <= a.rows(); ++k) {
        if (power.is_zero()) return k;
        power = power * a;
    }
    if (power.is_zero()) return static_cast<unsigned>(a.rows());
    return std::nullopt;
}

RationalMatrix nilpotent_matrix_flow(const RationalMatrix& a, const Rational& t) {
    const auto index = nilpotency_index(a);
    if (!index) throw NotNilpotentError("nilpotent_matrix_flow: matrix is not nilpotent");
    RationalMatrix out = RationalMatrix::identity(a.rows());
    RationalMatrix power = RationalMatrix::identity(a.rows());
    Rational tpow(1);
    for (unsigned j = 1; j < *index; ++j) {
        power = power * a;
        tpow *= t;
        out = out + power * (tpow / factorial(j));
    }
    return out;
}

std::vector<std::vector<Rational>> vectorize(const std::vector<RationalMatrix>& mats) {
    std::vector<std::vector<Rational>> out;
    out.reserve(mats.size());
    for (const auto& m : mats) out.push_back(m.row_major());
    return out;
}

bool matrix_span_equal(const std::vector<RationalMatrix>& a,
                       const std::vector<RationalMatrix>& b) {
    return subspace_equal(vectorize(a), vectorize(b));
}

bool matrix_span_contains(const std::vector<RationalMatrix>& big,
                          const std::vector<RationalMatrix>& small) {
    return subspace_contains(vectorize(big), vectorize(small));
}

bool all_commute(const std::vector<RationalMatrix>& mats) {
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (!commutator(mats[i], mats[j]).is_zero()) return false;
    return true;
}

}  // namespace nilflow
