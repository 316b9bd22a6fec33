#include "nilflow/ode.hpp"

#include <algorithm>
#include <cmath>

#include "nilflow/errors.hpp"

namespace nilflow {

namespace {

// Dormand-Prince 5(4) tableau, first-same-as-last.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384,    0.0,          500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84,   0.0};
constexpr double kB4[7] = {5179.0 / 57600,   0.0,           7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct Stepper {
    const OdeProblem& p;
    std::vector<std::vector<double>> k;
    std::vector<double> ytmp, ynew, yerr;

    explicit Stepper(const OdeProblem& problem)
        : p(problem),
          k(7, std::vector<double>(problem.dimension)),
          ytmp(problem.dimension),
          ynew(problem.dimension),
          yerr(problem.dimension) {}

    // One Dormand-Prince attempt from (t, y) with stage 0 already filled.
    // Returns the scaled error norm.
    double attempt(double t, const std::vector<double>& y, double h, double rel_tol,
                   double abs_tol) {
        for (int stage = 1; stage < 7; ++stage) {
            for (std::size_t i = 0; i < p.dimension; ++i) {
                double acc = 0.0;
                for (int j = 0; j < stage; ++j) acc += kA[stage][j] * k[j][i];
                ytmp[i] = y[i] + h * acc;
            }
            p.rhs(t + kC[stage] * h, ytmp, k[stage]);
        }
        double err_sq = 0.0;
        for (std::size_t i = 0; i < p.dimension; ++i) {
            double acc5 = 0.0, acc4 = 0.0;
            for (int j = 0; j < 7; ++j) {
                acc5 += kB5[j] * k[j][i];
                acc4 += kB4[j] * k[j][i];
            }
            ynew[i] = y[i] + h * acc5;
            yerr[i] = h * (acc5 - acc4);
            const double scale =
                abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double e = yerr[i] / scale;
            err_sq += e * e;
        }
        return std::sqrt(err_sq / static_cast<double>(p.dimension));
    }

    void rk4_step(double t, std::vector<double>& y, double h) {
        p.rhs(t, y, k[0]);
        for (std::size_t i = 0; i < p.dimension; ++i) ytmp[i] = y[i] + 0.5 * h * k[0][i];
        p.rhs(t + 0.5 * h, ytmp, k[1]);
        for (std::size_t i = 0; i < p.dimension; ++i) ytmp[i] = y[i] + 0.5 * h * k[1][i];
        p.rhs(t + 0.5 * h, ytmp, k[2]);
        for (std::size_t i = 0; i < p.dimension; ++i) ytmp[i] = y[i] + h * k[2][i];
        p.rhs(t + h, ytmp, k[3]);
        for (std::size_t i = 0; i < p.dimension; ++i)
            y[i] += h / 6.0 * (k[0][i] + 2 * k[1][i] + 2 * k[2][i] + k[3][i]);
    }
};

void validate(const OdeProblem& p, const IntegratorConfig& cfg, double t_end) {
    if (p.dimension == 0 || p.y0.size() != p.dimension)
        throw DimensionMismatchError("ode problem: initial state size mismatch");
    if (!(t_end > p.t0)) throw Error("integrate: t_end must exceed the initial time");
    if (!(cfg.rel_tol > 0) || !(cfg.abs_tol > 0)) throw Error("integrate: tolerances must be positive");
    if (!(cfg.min_step < cfg.max_step)) throw Error("integrate: min_step must be below max_step");
    if (!cfg.grid.empty()) {
        if (cfg.grid.front() != p.t0 || cfg.grid.back() != t_end)
            throw Error("integrate: grid must span [t0, t_end]");
        for (std::size_t i = 1; i < cfg.grid.size(); ++i)
            if (!(cfg.grid[i] > cfg.grid[i - 1]))
                throw Error("integrate: grid times must be strictly increasing");
    }
}

}  // namespace

std::vector<double> Trajectory::component(std::size_t i) const {
    std::vector<double> out(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) out[s] = states[s].at(i);
    return out;
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t samples) {
    if (samples < 2) throw Error("uniform_grid needs at least two samples");
    std::vector<double> g(samples);
    for (std::size_t i = 0; i < samples; ++i)
        g[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(samples - 1);
    g.back() = t1;
    return g;
}

Trajectory integrate(const OdeProblem& p, const IntegratorConfig& cfg, double t_end) {
    validate(p, cfg, t_end);
    const std::vector<double> grid =
        cfg.grid.empty() ? uniform_grid(p.t0, t_end, cfg.samples) : cfg.grid;

    Trajectory traj;
    traj.times.push_back(grid[0]);
    traj.states.push_back(p.y0);

    Stepper st(p);
    std::vector<double> y = p.y0;
    double t = p.t0;

    try {
        if (cfg.mode == IntegratorMode::FixedRk4) {
            for (std::size_t g = 1; g < grid.size(); ++g) {
                const double span = grid[g] - t;
                const auto n = static_cast<std::size_t>(std::ceil(span / cfg.step - 1e-12));
                const double h = span / static_cast<double>(std::max<std::size_t>(n, 1));
                for (std::size_t i = 0; i < std::max<std::size_t>(n, 1); ++i) {
                    st.rk4_step(t, y, h);
                    t += h;
                }
                t = grid[g];
                traj.times.push_back(t);
                traj.states.push_back(y);
            }
            return traj;
        }

        // adaptive Dormand-Prince
        double h = cfg.initial_step.value_or((t_end - p.t0) / 100.0);
        h = std::clamp(h, cfg.min_step, cfg.max_step);
        p.rhs(t, y, st.k[0]);
        std::size_t g = 1;
        while (g < grid.size()) {
            const double remaining = grid[g] - t;
            const bool boundary = h >= remaining;
            const double h_try = boundary ? remaining : h;
            if (h_try < cfg.min_step && !boundary) {
                traj.status = TrajectoryStatus::StiffOrSingular;
                traj.failure_time = t;
                return traj;
            }

            const double err = st.attempt(t, y, h_try, cfg.rel_tol, cfg.abs_tol);
            if (!std::isfinite(err)) {
                h = std::max(h_try * 0.5, cfg.min_step);
                if (h_try <= cfg.min_step) {
                    traj.status = TrajectoryStatus::StiffOrSingular;
                    traj.failure_time = t;
                    return traj;
                }
                continue;
            }
            if (err <= 1.0) {
                t = boundary ? grid[g] : t + h_try;
                y = st.ynew;
                st.k[0] = st.k[6];  // first-same-as-last
                traj.step_errors.push_back(err);
                if (boundary) {
                    traj.times.push_back(t);
                    traj.states.push_back(y);
                    ++g;
                }
                const double grow = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
                h = std::clamp(h * std::clamp(grow, 0.2, 5.0), cfg.min_step, cfg.max_step);
            } else {
                const double shrink = 0.9 * std::pow(err, -0.2);
                const double h_next = h_try * std::clamp(shrink, 0.2, 1.0);
                if (h_next < cfg.min_step) {
                    traj.status = TrajectoryStatus::StiffOrSingular;
                    traj.failure_time = t;
                    return traj;
                }
                h = h_next;
            }
        }
    } catch (const SingularityError& e) {
        traj.status = TrajectoryStatus::Singularity;
        traj.failure_time = e.time;
    }
    return traj;
}

std::vector<double> fd_weights(double x0, std::span<const double> nodes, unsigned order) {
    // Fornberg recursion for finite-difference weights.
    const std::size_t n = nodes.size();
    if (n == 0 || order >= n) throw Error("fd_weights: not enough nodes for the order");
    std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
    c[0][0] = 1.0;
    double c1 = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        double c2 = 1.0;
        const double xi = nodes[i];
        for (std::size_t j = 0; j < i; ++j) {
            const double xj = nodes[j];
            const double c3 = xi - xj;
            c2 *= c3;
            if (j == i - 1) {
                for (unsigned m = std::min<unsigned>(order, static_cast<unsigned>(i)); m >= 1;
                     --m)
                    c[i][m] = c1 * (m * c[i - 1][m - 1] - (nodes[i - 1] - x0) * c[i - 1][m]) / c2;
                c[i][0] = -c1 * (nodes[i - 1] - x0) * c[i - 1][0] / c2;
            }
            for (unsigned m = std::min<unsigned>(order, static_cast<unsigned>(i)); m >= 1; --m)
                c[j][m] = ((xi - x0) * c[j][m] - m * c[j][m - 1]) / c3;
            c[j][0] = (xi - x0) * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = c[j][order];
    return w;
}

std::vector<double> numeric_derivative(const std::vector<double>& times,
                                       const std::vector<double>& values, unsigned order) {
    if (order < 1 || order > 3) throw Error("numeric_derivative supports orders 1..3");
    const std::size_t n = times.size();
    if (n != values.size()) throw DimensionMismatchError("times/values length mismatch");
    if (n < 7) throw Error("numeric_derivative needs at least 7 samples");
    const double h = times[1] - times[0];
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs((times[i] - times[i - 1]) - h) > 1e-9 * std::max(std::abs(h), 1.0))
            throw Error("numeric_derivative requires a uniform sample grid");

    constexpr std::size_t kWindow = 7;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t start =
            std::min(std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(i) - 3),
                     static_cast<std::ptrdiff_t>(n - kWindow));
        std::vector<double> nodes(kWindow);
        for (std::size_t j = 0; j < kWindow; ++j) nodes[j] = times[start + j];
        const auto w = fd_weights(times[i], nodes, order);
        double acc = 0.0;
        for (std::size_t j = 0; j < kWindow; ++j) acc += w[j] * values[start + j];
        out[i] = acc;
    }
    return out;
}

std::vector<double> numeric_derivative(const Trajectory& traj, std::size_t component,
                                       unsigned order) {
    return numeric_derivative(traj.times, traj.component(component), order);
}

}  // namespace nilflow
