#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nilflow/free_system.hpp"
#include "nilflow/polynomial.hpp"

namespace nilflow {

// Closed forms of the sigma3/sigma1 coefficients of M^(k), the conjugated
// k-th derivative G^-1 X^(k) G = Q^(k) + m3 sigma3 + m1 sigma1, derived
// symbolically from the recursion
//   M^(k+1) = d/dt M^(k) + [tau, M^(k)],   tau = phidot sigma2,
// over the ring in l1..l5 (angular tower), q0..q4 (eigenvalue-gap jets) and
// u = 1/q0. Monomials are kept reduced modulo u*q0 = 1.
struct ReducedMForms {
    std::vector<std::string> coords;
    // index k = 1..4; entry 0 unused
    std::vector<Polynomial> m3;
    std::vector<Polynomial> m1;
};

// Computed once and cached; thread-safe.
const ReducedMForms& reduced_m_forms();

// Numeric substitution of a form at a reduced state. Gap jets beyond what the
// jet carries default to zero; tower entries beyond its length likewise.
double eval_reduced_form(const Polynomial& form, std::span<const double> gap_jets,
                         std::span<const double> tower, double t_for_error);

struct MComponents {
    double m3 = 0;  // sigma3 coefficient
    double m1 = 0;  // sigma1 coefficient; vanishing is the reduction constraint
};

// Evaluates the audited closed forms for M^(order). Throws SingularityError
// at the collision locus q = 0.
MComponents m_components(unsigned order, const ReducedJet& jet, const AngularTower& tower);

// Alternative closed forms compared by the audits. "Recursion" forms come
// from reduced_m_forms(); the others are the fixed textbook-style variants
// they are checked against.
double cm3_sigma3_recursion(double q, double qd, double l1, double l2);
double cm3_sigma3_variant_linear_l1(double q, double qd, double l1, double l2);
double cm4_sigma3_recursion(double q, double qd, double qdd, double l1, double l2, double l3);
double cm4_sigma3_variant_low_qdot_sq(double q, double qd, double qdd, double l1, double l2,
                                      double l3);

// Angular tower transported along the flow: ldot_j = l_{j+1}, the top level
// constant, so l_j(t) is an exact polynomial in t.
AngularTower tower_at_time(const AngularTower& initial, double t);

// Right-hand side of the reduced order-k system as a first-order evaluator.
// State layout: [q1, q2, q1', q2', ..., q1^(k-1), q2^(k-1)]. The evaluator is
// immutable and safe to share across threads.
using RhsFn = std::function<void(double, std::span<const double>, std::span<double>)>;

RhsFn cm_rhs(unsigned order, const AngularTower& initial_tower);

// Order-2 system with a constant acceleration term c1 (both eigenvalues
// accelerate equally).
RhsFn cm2_accel_rhs(double l1, double c1);

// sigma1 component of M^(3): zero exactly on the invariant manifold of the
// reduced third-order system.
double constraint_residual(const ReducedJet& jet, const AngularTower& tower);

// sigma1 component of M^(4), monitored for the fourth-order reduction.
double order4_constraint_residual(const ReducedJet& jet, const AngularTower& tower);

// Conserved energy of the constant-acceleration system in reduced
// coordinates; equals (1/2)tr(Xdot^2) - 2(c1 x + c2 y + c3 z) on the matrix
// side. Constant along trajectories of Xddot = A.
double hamiltonian_accel(const ReducedJet& jet, double phi, double c1, double c2, double c3,
                         double l1);

// Assembles the flat initial state for cm_rhs from a reduced jet.
std::vector<double> reduced_state(const ReducedJet& jet, unsigned order);

// Guard for raw (non-derived) order-3 initial data: residual beyond the
// tolerance requires the explicit override; the warning flag is returned.
bool check_order3_initial(const ReducedJet& jet, const AngularTower& tower,
                          bool allow_off_manifold, double tolerance = 1e-8);

}  // namespace nilflow
