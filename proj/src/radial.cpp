#include "nilflow/radial.hpp"

#include <cmath>

#include "nilflow/errors.hpp"

namespace nilflow {

double radial_accel(const RadialParams2& p, double r, double rdot) {
    if (r == 0.0) throw SingularityError("radial singularity: r = 0", 0.0);
    const double denom = r * (p.alpha * r * r + (1.0 - p.alpha));
    if (denom == 0.0) throw SingularityError("radial singularity: zero denominator", 0.0);
    const double num =
        p.alpha * p.l1_sq + 2.0 * (1.0 - p.alpha) * p.e1 - (1.0 - p.alpha) * rdot * rdot;
    return num / denom;
}

double radial_jerk(const RadialParams3& p, double t, double r, double rdot, double rddot) {
    if (r == 0.0) throw SingularityError("radial singularity: r = 0", t);
    const double e2 = p.a_sq * t + p.c;
    return 3.0 * (e2 - rdot * rddot) / r;
}

RadialRhs radial_rhs(const RadialParams2& p) {
    return [p](double t, std::span<const double> y, std::span<double> dy) {
        if (y.size() != 2 || dy.size() != 2)
            throw DimensionMismatchError("radial order-2 state is (r, rdot)");
        if (y[0] == 0.0) throw SingularityError("radial singularity: r = 0", t);
        dy[0] = y[1];
        const double denom = y[0] * (p.alpha * y[0] * y[0] + (1.0 - p.alpha));
        if (denom == 0.0)
            throw SingularityError("radial singularity: zero denominator", t);
        dy[1] = (p.alpha * p.l1_sq + 2.0 * (1.0 - p.alpha) * p.e1 -
                 (1.0 - p.alpha) * y[1] * y[1]) /
                denom;
    };
}

RadialRhs radial_rhs(const RadialParams3& p) {
    return [p](double t, std::span<const double> y, std::span<double> dy) {
        if (y.size() != 3 || dy.size() != 3)
            throw DimensionMismatchError("radial order-3 state is (r, rdot, rddot)");
        if (y[0] == 0.0) throw SingularityError("radial singularity: r = 0", t);
        dy[0] = y[1];
        dy[1] = y[2];
        dy[2] = 3.0 * ((p.a_sq * t + p.c) - y[1] * y[2]) / y[0];
    };
}

double Vec3::norm() const { return std::sqrt(dot(*this)); }

double FreeFlight3::radial_velocity(double t) const {
    const Vec3 r = position(t);
    const double n = r.norm();
    if (n == 0.0) throw SingularityError("free flight passes through the origin", t);
    return r.dot(velocity(t)) / n;
}

double FreeFlight3::radial_acceleration(double t) const {
    const Vec3 r = position(t);
    const Vec3 v = velocity(t);
    const double n = r.norm();
    if (n == 0.0) throw SingularityError("free flight passes through the origin", t);
    const double rdot = r.dot(v) / n;
    return (v.dot(v) + r.dot(a0) - rdot * rdot) / n;
}

}  // namespace nilflow
