#pragma once

#include <span>
#include <vector>

namespace nilflow {

struct PolyFit {
    std::vector<double> coefficients;  // ascending powers
    double max_residual = 0.0;

    double eval(double t) const;
};

// Least-squares polynomial fit of the given degree (Householder QR on the
// Vandermonde matrix). Throws when the sample count is not above degree + 1.
PolyFit polyfit_residual(std::span<const double> times, std::span<const double> values,
                         unsigned degree);

}  // namespace nilflow
