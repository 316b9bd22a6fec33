#include "nilflow/polyfit.hpp"

#include <cmath>

#include "nilflow/errors.hpp"

namespace nilflow {

double PolyFit::eval(double t) const {
    double acc = 0.0;
    for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * t + coefficients[i];
    return acc;
}

PolyFit polyfit_residual(std::span<const double> times, std::span<const double> values,
                         unsigned degree) {
    const std::size_t m = times.size();
    const std::size_t n = degree + 1;
    if (values.size() != m) throw DimensionMismatchError("polyfit: times/values mismatch");
    if (m <= n) throw Error("polyfit: underdetermined fit (need more than degree+1 samples)");

    // Vandermonde system, reduced in place by Householder reflections.
    std::vector<std::vector<double>> a(m, std::vector<double>(n));
    std::vector<double> b(values.begin(), values.end());
    for (std::size_t i = 0; i < m; ++i) {
        double p = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = p;
            p *= times[i];
        }
    }

    for (std::size_t col = 0; col < n; ++col) {
        double norm = 0.0;
        for (std::size_t i = col; i < m; ++i) norm += a[i][col] * a[i][col];
        norm = std::sqrt(norm);
        if (norm == 0.0) throw Error("polyfit: rank-deficient Vandermonde matrix");
        if (a[col][col] > 0) norm = -norm;

        std::vector<double> v(m, 0.0);
        v[col] = a[col][col] - norm;
        for (std::size_t i = col + 1; i < m; ++i) v[i] = a[i][col];
        double vtv = 0.0;
        for (std::size_t i = col; i < m; ++i) vtv += v[i] * v[i];
        if (vtv == 0.0) continue;

        for (std::size_t j = col; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = col; i < m; ++i) dot += v[i] * a[i][j];
            const double f = 2.0 * dot / vtv;
            for (std::size_t i = col; i < m; ++i) a[i][j] -= f * v[i];
        }
        double dot = 0.0;
        for (std::size_t i = col; i < m; ++i) dot += v[i] * b[i];
        const double f = 2.0 * dot / vtv;
        for (std::size_t i = col; i < m; ++i) b[i] -= f * v[i];
    }

    PolyFit fit;
    fit.coefficients.assign(n, 0.0);
    for (std::size_t row = n; row-- > 0;) {
        double acc = b[row];
        for (std::size_t j = row + 1; j < n; ++j) acc -= a[row][j] * fit.coefficients[j];
        fit.coefficients[row] = acc / a[row][row];
    }
    for (std::size_t i = 0; i < m; ++i)
        fit.max_residual = std::max(fit.max_residual, std::abs(values[i] - fit.eval(times[i])));
    return fit;
}

}  // namespace nilflow
