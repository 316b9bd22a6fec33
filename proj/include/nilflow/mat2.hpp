#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace nilflow {

// Dense real 2x2 matrix: [[a, b], [c, d]].
struct Mat2 {
    double a = 0, b = 0, c = 0, d = 0;

    Mat2 operator+(const Mat2& m) const { return {a + m.a, b + m.b, c + m.c, d + m.d}; }
    Mat2 operator-(const Mat2& m) const { return {a - m.a, b - m.b, c - m.c, d - m.d}; }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator*(const Mat2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
    }
    double trace() const { return a + d; }
    Mat2 transpose() const { return {a, c, b, d}; }
    double max_abs() const;
};

Mat2 commutator(const Mat2& x, const Mat2& y);

// sigma1 = [[0,1],[1,0]], sigma2 = [[0,1],[-1,0]] (skew), sigma3 = [[1,0],[0,-1]].
Mat2 sigma1();
Mat2 sigma2();
Mat2 sigma3();

// Real symmetric 2x2 matrix in the (x, y, z) parametrization
// X = x*I + y*sigma1 + z*sigma3 = [[x+z, y], [y, x-z]].
struct SymMat2 {
    double x = 0, y = 0, z = 0;

    static SymMat2 from_entries(double a11, double a12, double a22);
    Mat2 matrix() const { return {x + z, y, y, x - z}; }
    SymMat2 operator+(const SymMat2& m) const { return {x + m.x, y + m.y, z + m.z}; }
    SymMat2 operator-(const SymMat2& m) const { return {x - m.x, y - m.y, z - m.z}; }
    SymMat2 operator*(double s) const { return {x * s, y * s, z * s}; }
    double trace() const { return 2 * x; }
};

// Polynomial in one real variable with Mat2 coefficients (ascending powers).
// Used for exact differentiation of matrix curves like [X(t), Xdot(t)].
class MatPoly {
public:
    MatPoly() = default;
    explicit MatPoly(std::vector<Mat2> coeffs) : coeffs_(std::move(coeffs)) {}

    const std::vector<Mat2>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    int degree(double tol = 0.0) const;

    MatPoly operator+(const MatPoly& rhs) const;
    MatPoly operator-(const MatPoly& rhs) const;
    MatPoly operator*(const MatPoly& rhs) const;
    MatPoly derivative() const;
    Mat2 eval(double t) const;

private:
    std::vector<Mat2> coeffs_;
};

MatPoly commutator(const MatPoly& x, const MatPoly& y);

}  // namespace nilflow
