#pragma once

#include <array>
#include <functional>
#include <span>

namespace nilflow {

// Radial reductions of free motion in three dimensions.
//
// Order 2 restricts rddot = r*ndot^2 to the level set
// alpha*l1_sq + 2(1-alpha)*E1 = const:
//   rddot = (alpha l1^2 + 2(1-alpha) E1 - (1-alpha) rdot^2) / (r (alpha r^2 + 1-alpha)).
// Order 3 uses the second energy level E2(t) = a_sq*t + c:
//   rdddot = 3 (E2(t) - rdot rddot) / r.
struct RadialParams2 {
    double alpha = 1.0;  // in [0, 1]
    double l1_sq = 0.0;
    double e1 = 0.0;
};

struct RadialParams3 {
    double a_sq = 0.0;  // squared acceleration magnitude
    double c = 0.0;     // initial velocity-acceleration product
};

using RadialRhs = std::function<void(double, std::span<const double>, std::span<double>)>;

// State (r, rdot); throws SingularityError at r = 0 or a vanishing
// denominator.
RadialRhs radial_rhs(const RadialParams2& p);

// State (r, rdot, rddot); time-dependent right-hand side.
RadialRhs radial_rhs(const RadialParams3& p);

// Pointwise evaluation of the highest derivative (used by verification).
double radial_accel(const RadialParams2& p, double r, double rdot);
double radial_jerk(const RadialParams3& p, double t, double r, double rdot, double rddot);

// 3-vector free flight r(t) = r0 + v0 t (+ 1/2 a t^2): the oracle the radial
// reductions are checked against.
struct Vec3 {
    double x = 0, y = 0, z = 0;
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double norm() const;
};

struct FreeFlight3 {
    Vec3 r0, v0, a0;  // a0 zero for second-order motion

    Vec3 position(double t) const { return r0 + v0 * t + a0 * (0.5 * t * t); }
    Vec3 velocity(double t) const { return v0 + a0 * t; }
    double radius(double t) const { return position(t).norm(); }
    double radial_velocity(double t) const;      // d|r|/dt
    double radial_acceleration(double t) const;  // d^2|r|/dt^2

    double energy() const { return 0.5 * v0.dot(v0); }
    double angular_momentum_sq() const {
        const Vec3 l = r0.cross(v0);
        return l.dot(l);
    }
    RadialParams3 order3_params() const { return {a0.dot(a0), v0.dot(a0)}; }
};

}  // namespace nilflow
