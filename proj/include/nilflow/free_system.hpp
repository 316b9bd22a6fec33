#pragma once

#include <optional>
#include <vector>

#include "nilflow/jet.hpp"
#include "nilflow/mat2.hpp"

namespace nilflow {

// Jets long enough for fourth-derivative ground truth with slack.
inline constexpr std::size_t kJetLen = 7;
using DJet = Jet<kJetLen>;

// Initial data of a k-th order free system X^(k) = 0 on real symmetric 2x2
// matrices: jets = [X0, V0, (A0), (J0)], one entry per derivative order.
struct FreeState {
    unsigned order = 2;  // 2, 3 or 4
    std::vector<SymMat2> jets;

    void validate() const;

    // X^(deriv)(t) of the exact polynomial flow X(t) = sum_j jets[j] t^j / j!.
    SymMat2 flow(double t, unsigned deriv = 0) const;

    // x/y/z components of X(t) as plain polynomials in t (ascending coeffs).
    std::vector<double> x_poly() const;
    std::vector<double> y_poly() const;
    std::vector<double> z_poly() const;

    // X(t) as a matrix polynomial.
    MatPoly matrix_poly() const;
};

// Rotation G(phi) = [[cos, sin], [-sin, cos]] conjugating X to diag(q1, q2).
Mat2 rotation(double phi);

struct DiagResult {
    double phi = 0;  // in (-pi/2, pi/2] without a hint, else nearest branch
    double q1 = 0;   // q1 <= q2, so q = q2 - q1 >= 0
    double q2 = 0;
    bool degenerate = false;  // y = z = 0: any angle diagonalizes
};

// Eigendecomposition X = G(phi) diag(q1, q2) G(phi)^-1 with deterministic
// branch handling: principal angle without a hint, otherwise the
// representative phi + k*pi closest to the hint (continuity unwrapping).
DiagResult diagonalize(const SymMat2& x, std::optional<double> branch_hint = {});

SymMat2 rebuild(double phi, double q1, double q2);

// Angular tower: l[j-1] = (1/2) tr(d^(j-1)/dt^(j-1) [X, Xdot] sigma2) at t.
// An order-k free system carries 2k-3 levels; the top one is constant.
struct AngularTower {
    std::vector<double> l;
    double l1() const { return l.at(0); }
    double at(std::size_t j) const { return j <= l.size() ? (j == 0 ? 0.0 : l[j - 1]) : 0.0; }
};

AngularTower angular_tower(const FreeState& s, double t = 0.0);

// Energy tower from E = (1/2) Xdot^2: e1 = (1/2)tr(Xdot^2), e2 = tr(Xdot Xddot),
// e3 = tr(Xddot^2); nontrivial from order 3 on.
struct EnergyTower {
    double e1 = 0, e2 = 0, e3 = 0;
};

EnergyTower energy_tower(const FreeState& s, double t = 0.0);

// Reduced-coordinate data at a single time: derivative jets of the
// eigenvalues and of the rotation angle. q() must stay positive away from
// the collision locus.
struct ReducedJet {
    unsigned order = 2;
    double t = 0;
    std::vector<double> q1;   // [q1, q1', ..., q1^(order-1)] and one extra
    std::vector<double> q2;
    double phi = 0;
    std::vector<double> phi_jets;  // [phi, phi', phi'', ...]

    double q(std::size_t deriv = 0) const { return q2.at(deriv) - q1.at(deriv); }
    double phidot() const { return phi_jets.at(1); }
};

// Full analytic reduction of the free flow at time t: eigenvalue and angle
// jets via jet arithmetic on x, y, z and r = sqrt(y^2 + z^2). Throws
// DegenerateError when the eigenvalue gap vanishes.
ReducedJet reduce_at(const FreeState& s, double t, std::optional<double> phi_hint = {},
                     std::size_t jet_len = kJetLen);

// Constant-acceleration coefficients of an order-3 state, reading A = jets[2]
// as c1*I + c2*sigma1 + c3*sigma3.
struct AccelCoefficients {
    double c1 = 0, c2 = 0, c3 = 0;
};
AccelCoefficients accel_coefficients(const FreeState& s);

}  // namespace nilflow
