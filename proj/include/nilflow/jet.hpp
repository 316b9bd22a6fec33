#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "nilflow/errors.hpp"

namespace nilflow {

// Truncated Taylor series at a point: coeff[k] = f^(k)/k!. Arithmetic on
// jets gives exact (to machine precision) derivatives of composite
// expressions; this is how the oracle differentiates eigenvalue and angle
// curves analytically instead of by finite differences.
template <std::size_t N>
struct Jet {
    std::array<double, N> coeff{};

    static Jet constant(double v) {
        Jet j;
        j.coeff[0] = v;
        return j;
    }

    double value() const { return coeff[0]; }
    double derivative(std::size_t order) const {
        if (order >= N) return 0.0;
        double f = 1.0;
        for (std::size_t k = 2; k <= order; ++k) f *= static_cast<double>(k);
        return coeff[order] * f;
    }

    // d/dt as a jet, one order shorter in content.
    Jet shifted() const {
        Jet out;
        for (std::size_t k = 0; k + 1 < N; ++k)
            out.coeff[k] = coeff[k + 1] * static_cast<double>(k + 1);
        return out;
    }

    Jet operator+(const Jet& r) const {
        Jet out;
        for (std::size_t k = 0; k < N; ++k) out.coeff[k] = coeff[k] + r.coeff[k];
        return out;
    }
    Jet operator-(const Jet& r) const {
        Jet out;
        for (std::size_t k = 0; k < N; ++k) out.coeff[k] = coeff[k] - r.coeff[k];
        return out;
    }
    Jet operator*(double s) const {
        Jet out;
        for (std::size_t k = 0; k < N; ++k) out.coeff[k] = coeff[k] * s;
        return out;
    }
    Jet operator*(const Jet& r) const {
        Jet out;
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t j = 0; j <= k; ++j) out.coeff[k] += coeff[j] * r.coeff[k - j];
        return out;
    }
    Jet operator/(const Jet& r) const {
        if (r.coeff[0] == 0.0) throw Error("jet division by zero leading coefficient");
        Jet out;
        for (std::size_t k = 0; k < N; ++k) {
            double acc = coeff[k];
            for (std::size_t j = 0; j < k; ++j) acc -= out.coeff[j] * r.coeff[k - j];
            out.coeff[k] = acc / r.coeff[0];
        }
        return out;
    }
};

template <std::size_t N>
Jet<N> sqrt(const Jet<N>& a) {
    if (a.coeff[0] <= 0.0) throw Error("jet sqrt needs a positive leading coefficient");
    Jet<N> out;
    out.coeff[0] = std::sqrt(a.coeff[0]);
    for (std::size_t k = 1; k < N; ++k) {
        double acc = a.coeff[k];
        for (std::size_t j = 1; j < k; ++j) acc -= out.coeff[j] * out.coeff[k - j];
        out.coeff[k] = acc / (2.0 * out.coeff[0]);
    }
    return out;
}

// Jet of a scalar polynomial sum_j c[j] t^j recentred at t0.
template <std::size_t N>
Jet<N> polynomial_jet(const std::vector<double>& c, double t0) {
    Jet<N> out;
    // Horner on jets: evaluate at (t0 + dt) where dt is the jet variable.
    Jet<N> t;
    t.coeff[0] = t0;
    if (N > 1) t.coeff[1] = 1.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        out = out * t;
        out.coeff[0] += c[i];
    }
    return out;
}

}  // namespace nilflow
