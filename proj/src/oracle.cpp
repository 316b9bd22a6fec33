#include "nilflow/oracle.hpp"

#include <cmath>

#include "nilflow/errors.hpp"
#include "nilflow/reduced_forms.hpp"

namespace nilflow {

std::vector<double> OracleTrajectory::q1() const {
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) out[i] = samples[i].q1[0];
    return out;
}
std::vector<double> OracleTrajectory::q2() const {
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) out[i] = samples[i].q2[0];
    return out;
}
std::vector<double> OracleTrajectory::phi() const {
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) out[i] = samples[i].phi;
    return out;
}
std::vector<double> OracleTrajectory::l(std::size_t j) const {
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) out[i] = towers[i].l.at(j - 1);
    return out;
}
std::vector<double> OracleTrajectory::e1() const {
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) out[i] = energies[i].e1;
    return out;
}

OracleTrajectory oracle_trajectory(const FreeState& s, std::span<const double> grid,
                                   double min_gap) {
    s.validate();
    OracleTrajectory traj;
    traj.state = s;
    std::optional<double> hint;
    for (const double t : grid) {
        const SymMat2 x = s.flow(t);
        const double gap = 2.0 * std::hypot(x.y, x.z);
        if (gap <= min_gap) {
            traj.collision = true;
            traj.collision_time = t;
            break;
        }
        ReducedJet jet = reduce_at(s, t, hint);
        hint = jet.phi;
        traj.times.push_back(t);
        traj.towers.push_back(angular_tower(s, t));
        traj.energies.push_back(energy_tower(s, t));
        traj.samples.push_back(std::move(jet));
    }
    return traj;
}

double conjugation_error(const OracleTrajectory& traj) {
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const ReducedJet& jet = traj.samples[i];
        const SymMat2 x = traj.state.flow(traj.times[i]);
        const SymMat2 back = rebuild(jet.phi, jet.q1[0], jet.q2[0]);
        const double scale =
            std::max({std::abs(x.x), std::abs(x.y), std::abs(x.z), 1.0});
        const double err = std::max({std::abs(back.x - x.x), std::abs(back.y - x.y),
                                     std::abs(back.z - x.z)}) /
                           scale;
        worst = std::max(worst, err);
    }
    return worst;
}

ReductionComparison compare_reduction(const FreeState& s, double t_end, double tol,
                                      const IntegratorConfig& cfg) {
    s.validate();
    ReductionComparison report;
    report.order = s.order;
    report.t_end = t_end;
    report.tol = tol;

    IntegratorConfig config = cfg;
    if (config.grid.empty()) config.grid = uniform_grid(0.0, t_end, config.samples);

    const OracleTrajectory oracle = oracle_trajectory(s, config.grid);
    report.collision = oracle.collision;
    report.collision_time = oracle.collision_time;
    if (oracle.samples.empty()) return report;

    OdeProblem problem;
    problem.dimension = 2 * s.order;
    problem.t0 = config.grid.front();
    problem.y0 = reduced_state(oracle.samples.front(), s.order);
    problem.rhs = cm_rhs(s.order, oracle.towers.front());

    // compare only on the collision-free part the oracle reached
    config.grid.resize(oracle.times.size());
    const Trajectory reduced = integrate(problem, config, config.grid.back());

    const std::size_t n = std::min(reduced.size(), oracle.samples.size());
    report.samples = n;
    for (std::size_t i = 0; i < n; ++i) {
        report.max_error = std::max(
            report.max_error, std::abs(reduced.states[i][0] - oracle.samples[i].q1[0]));
        report.max_error = std::max(
            report.max_error, std::abs(reduced.states[i][1] - oracle.samples[i].q2[0]));
    }
    report.pass = !oracle.collision && reduced.status == TrajectoryStatus::Ok &&
                  reduced.size() == oracle.samples.size() && report.max_error <= tol;
    return report;
}

FreeState random_free_state(unsigned order, SplitMix64& rng) {
    FreeState s;
    s.order = order;
    for (unsigned j = 0; j < order; ++j)
        s.jets.push_back(
            {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
    return s;
}

FreeState random_collision_free_state(unsigned order, SplitMix64& rng, double window_end,
                                      double min_gap) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        FreeState s = random_free_state(order, rng);
        bool ok = true;
        for (int i = 0; i <= 100 && ok; ++i) {
            const double t = window_end * i / 100.0;
            const SymMat2 x = s.flow(t);
            if (2.0 * std::hypot(x.y, x.z) < min_gap) ok = false;
        }
        if (ok) return s;
    }
    throw Error("random_collision_free_state: rejection sampling failed");
}

}  // namespace nilflow
