#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace nilflow {

using OdeRhs = std::function<void(double, std::span<const double>, std::span<double>)>;

// First-order initial value problem. The right-hand side must be total:
// singular states raise SingularityError instead of producing non-finite
// values, and the integrator turns that into a hard stop.
struct OdeProblem {
    std::size_t dimension = 0;
    OdeRhs rhs;
    double t0 = 0.0;
    std::vector<double> y0;
};

enum class IntegratorMode { FixedRk4, AdaptiveRk45 };

struct IntegratorConfig {
    IntegratorMode mode = IntegratorMode::AdaptiveRk45;
    double step = 1e-3;  // fixed mode: upper bound on the substep
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 1.0;
    double min_step = 1e-12;
    std::optional<double> initial_step;
    std::size_t samples = 101;          // uniform grid size when grid is empty
    std::vector<double> grid;           // explicit sample times (strictly increasing)
};

enum class TrajectoryStatus { Ok, Singularity, StiffOrSingular };

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<double> step_errors;  // per accepted step, adaptive mode
    TrajectoryStatus status = TrajectoryStatus::Ok;
    std::optional<double> failure_time;

    std::size_t size() const { return times.size(); }
    std::vector<double> component(std::size_t i) const;
};

// Integrates up to t_end, sampling exactly on the requested grid (grid points
// are step boundaries). On evaluator singularity or step-size underflow the
// partial trajectory is returned with the failure time set.
Trajectory integrate(const OdeProblem& p, const IntegratorConfig& cfg, double t_end);

std::vector<double> uniform_grid(double t0, double t1, std::size_t samples);

// Finite-difference derivative of one trajectory component on a uniform
// grid: 7-point interior stencils, one-sided at the boundaries.
std::vector<double> numeric_derivative(const Trajectory& traj, std::size_t component,
                                       unsigned order);
std::vector<double> numeric_derivative(const std::vector<double>& times,
                                       const std::vector<double>& values, unsigned order);

// Fornberg weights for the m-th derivative at x0 from the given nodes.
std::vector<double> fd_weights(double x0, std::span<const double> nodes, unsigned order);

}  // namespace nilflow
