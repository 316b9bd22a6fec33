#include "nilflow/mat2.hpp"

#include <cmath>
#include <cstdlib>

#include "nilflow/errors.hpp"

namespace nilflow {

double Mat2::max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y - y * x; }

Mat2 sigma1() { return {0, 1, 1, 0}; }
Mat2 sigma2() { return {0, 1, -1, 0}; }
Mat2 sigma3() { return {1, 0, 0, -1}; }

SymMat2 SymMat2::from_entries(double a11, double a12, double a22) {
    return {(a11 + a22) / 2, a12, (a11 - a22) / 2};
}

int MatPoly::degree(double tol) const {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i].max_abs() > tol) return static_cast<int>(i);
    return -1;
}

MatPoly MatPoly::operator+(const MatPoly& rhs) const {
    std::vector<Mat2> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = out[i] + coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] = out[i] + rhs.coeffs_[i];
    return MatPoly(std::move(out));
}

MatPoly MatPoly::operator-(const MatPoly& rhs) const {
    std::vector<Mat2> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = out[i] + coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] = out[i] - rhs.coeffs_[i];
    return MatPoly(std::move(out));
}

MatPoly MatPoly::operator*(const MatPoly& rhs) const {
    if (coeffs_.empty() || rhs.coeffs_.empty()) return {};
    std::vector<Mat2> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = out[i + j] + coeffs_[i] * rhs.coeffs_[j];
    return MatPoly(std::move(out));
}

MatPoly MatPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Mat2> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * static_cast<double>(i);
    return MatPoly(std::move(out));
}

Mat2 MatPoly::eval(double t) const {
    Mat2 acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

MatPoly commutator(const MatPoly& x, const MatPoly& y) { return x * y - y * x; }

}  // namespace nilflow
