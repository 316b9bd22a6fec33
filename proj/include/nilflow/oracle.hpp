#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nilflow/free_system.hpp"
#include "nilflow/ode.hpp"
#include "nilflow/rng.hpp"

namespace nilflow {

inline constexpr std::uint64_t kDefaultSeed = 0x6e696c666c6f77ull;  // "nilflow"

// Ground truth for every reduced formula: the exact polynomial flow of a
// free matrix system, diagonalized sample by sample with a continuously
// unwrapped angle, all derivative jets analytic (jet arithmetic, no finite
// differences).
struct OracleTrajectory {
    FreeState state;
    std::vector<double> times;
    std::vector<ReducedJet> samples;
    std::vector<AngularTower> towers;    // instantaneous angular tower per sample
    std::vector<EnergyTower> energies;   // instantaneous energy tower per sample
    bool collision = false;
    std::optional<double> collision_time;

    std::vector<double> q1() const;
    std::vector<double> q2() const;
    std::vector<double> phi() const;
    std::vector<double> l(std::size_t j) const;  // l_j(t), 1-based
    std::vector<double> e1() const;
};

// Samples the reduced flow on the grid. On a collision (eigenvalue gap below
// min_gap) the partial trajectory is returned with the collision flag set.
OracleTrajectory oracle_trajectory(const FreeState& s, std::span<const double> grid,
                                   double min_gap = 1e-9);

// Largest relative error of G(phi) diag(q1,q2) G(phi)^-1 against X(t) over
// all samples; an internal consistency measure of the diagonalization.
double conjugation_error(const OracleTrajectory& traj);

struct ReductionComparison {
    unsigned order = 2;
    double t_end = 1.0;
    double tol = 1e-8;
    double max_error = 0.0;
    bool pass = false;
    bool collision = false;
    std::optional<double> collision_time;
    std::size_t samples = 0;
};

// Integrates the reduced system from oracle-derived initial data and reports
// the largest deviation of the integrated eigenvalue curves from the exact
// ones over the grid.
ReductionComparison compare_reduction(const FreeState& s, double t_end, double tol,
                                      const IntegratorConfig& cfg = {});

// Random free states with entries uniform in [-2, 2], rejected until the
// eigenvalue gap stays above min_gap on [0, window_end] (the reduced
// formulas degenerate near a collision).
FreeState random_free_state(unsigned order, SplitMix64& rng);
FreeState random_collision_free_state(unsigned order, SplitMix64& rng,
                                      double window_end = 1.0, double min_gap = 0.3);

}  // namespace nilflow
