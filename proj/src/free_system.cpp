#include "nilflow/free_system.hpp"

#include <cmath>

#include "nilflow/errors.hpp"

namespace nilflow {

namespace {

double factorial_d(unsigned n) {
    double f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

void FreeState::validate() const {
    if (order < 2 || order > 4) throw Error("free system order must be 2, 3 or 4");
    if (jets.size() != order)
        throw DimensionMismatchError("free state needs exactly `order` jets");
}

SymMat2 FreeState::flow(double t, unsigned deriv) const {
    validate();
    SymMat2 out;
    for (std::size_t j = deriv; j < jets.size(); ++j)
        out = out + jets[j] * (std::pow(t, double(j - deriv)) / factorial_d(j - deriv));
    return out;
}

std::vector<double> FreeState::x_poly() const {
    std::vector<double> c(jets.size());
    for (std::size_t j = 0; j < jets.size(); ++j) c[j] = jets[j].x / factorial_d(j);
    return c;
}
std::vector<double> FreeState::y_poly() const {
    std::vector<double> c(jets.size());
    for (std::size_t j = 0; j < jets.size(); ++j) c[j] = jets[j].y / factorial_d(j);
    return c;
}
std::vector<double> FreeState::z_poly() const {
    std::vector<double> c(jets.size());
    for (std::size_t j = 0; j < jets.size(); ++j) c[j] = jets[j].z / factorial_d(j);
    return c;
}

MatPoly FreeState::matrix_poly() const {
    validate();
    std::vector<Mat2> coeffs(jets.size());
    for (std::size_t j = 0; j < jets.size(); ++j)
        coeffs[j] = jets[j].matrix() * (1.0 / factorial_d(j));
    return MatPoly(std::move(coeffs));
}

Mat2 rotation(double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return {c, s, -s, c};
}

DiagResult diagonalize(const SymMat2& x, std::optional<double> branch_hint) {
    DiagResult out;
    const double r = std::hypot(x.y, x.z);
    if (x.y == 0.0 && x.z == 0.0) {
        out.degenerate = true;
        out.phi = branch_hint.value_or(0.0);
        out.q1 = out.q2 = x.x;
        return out;
    }
    out.q1 = x.x - r;
    out.q2 = x.x + r;
    // y = r sin(2 phi), z = -r cos(2 phi)
    double phi = 0.5 * std::atan2(x.y, -x.z);
    if (branch_hint) {
        const double k = std::round((*branch_hint - phi) / M_PI);
        phi += k * M_PI;
    }
    out.phi = phi;
    return out;
}

SymMat2 rebuild(double phi, double q1, double q2) {
    const double q = q2 - q1;
    return {(q1 + q2) / 2, 0.5 * q * std::sin(2 * phi), -0.5 * q * std::cos(2 * phi)};
}

AngularTower angular_tower(const FreeState& s, double t) {
    s.validate();
    const MatPoly x = s.matrix_poly();
    MatPoly level = commutator(x, x.derivative());  // [X, Xdot]
    AngularTower tower;
    const unsigned count = 2 * s.order - 3;
    const Mat2 s2 = sigma2();
    for (unsigned j = 0; j < count; ++j) {
        tower.l.push_back(0.5 * (level.eval(t) * s2).trace());
        level = level.derivative();
    }
    return tower;
}

EnergyTower energy_tower(const FreeState& s, double t) {
    s.validate();
    const Mat2 xdot = s.flow(t, 1).matrix();
    const Mat2 xddot = (s.order >= 3 ? s.flow(t, 2).matrix() : Mat2{});
    EnergyTower e;
    e.e1 = 0.5 * (xdot * xdot).trace();
    e.e2 = (xdot * xddot).trace();
    e.e3 = (xddot * xddot).trace();
    return e;
}

ReducedJet reduce_at(const FreeState& s, double t, std::optional<double> phi_hint,
                     std::size_t jet_len) {
    s.validate();
    if (jet_len > kJetLen) throw Error("reduce_at: jet length exceeds jet capacity");

    const DJet xj = polynomial_jet<kJetLen>(s.x_poly(), t);
    const DJet yj = polynomial_jet<kJetLen>(s.y_poly(), t);
    const DJet zj = polynomial_jet<kJetLen>(s.z_poly(), t);

    const DJet s2 = yj * yj + zj * zj;  // r^2
    if (s2.value() <= 0.0)
        throw DegenerateError("eigenvalue gap vanishes: rotation angle undefined");
    const DJet rj = sqrt(s2);
    const DJet q1j = xj - rj;
    const DJet q2j = xj + rj;

    // phi' = (y z' - z y') / (2 r^2); the angle itself comes from the
    // branch-resolved eigendecomposition.
    const DJet w = yj * zj.shifted() - zj * yj.shifted();
    const DJet phidot = w / (s2 * 2.0);

    ReducedJet jet;
    jet.order = s.order;
    jet.t = t;
    for (std::size_t k = 0; k < jet_len; ++k) {
        jet.q1.push_back(q1j.derivative(k));
        jet.q2.push_back(q2j.derivative(k));
    }
    const DiagResult d = diagonalize(s.flow(t), phi_hint);
    jet.phi = d.phi;
    jet.phi_jets.push_back(d.phi);
    for (std::size_t k = 0; k + 1 < jet_len; ++k)
        jet.phi_jets.push_back(phidot.derivative(k));
    return jet;
}

AccelCoefficients accel_coefficients(const FreeState& s) {
    s.validate();
    if (s.order < 3) throw Error("constant-acceleration coefficients need order >= 3");
    return {s.jets[2].x, s.jets[2].y, s.jets[2].z};
}

}  // namespace nilflow
