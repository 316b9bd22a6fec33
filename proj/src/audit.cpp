#include "nilflow/audit.hpp"

#include <cmath>
#include <limits>

#include "nilflow/errors.hpp"
#include "nilflow/reduced_forms.hpp"

namespace nilflow {

std::string to_string(AuditTarget target) {
    switch (target) {
        case AuditTarget::E1Order3: return "E1_ORDER3";
        case AuditTarget::Cm3Rhs: return "CM3_RHS";
        case AuditTarget::Cm4Rhs: return "CM4_RHS";
        case AuditTarget::ETowerTrace: return "E_TOWER_TRACE";
    }
    return "UNKNOWN";
}

AuditTarget audit_target_from_string(const std::string& name) {
    if (name == "E1_ORDER3") return AuditTarget::E1Order3;
    if (name == "CM3_RHS") return AuditTarget::Cm3Rhs;
    if (name == "CM4_RHS") return AuditTarget::Cm4Rhs;
    if (name == "E_TOWER_TRACE") return AuditTarget::ETowerTrace;
    throw Error("unknown audit target: " + name);
}

double AuditReport::winner_deviation() const {
    for (const auto& c : candidates)
        if (c.name == verdict) return c.max_deviation;
    return std::numeric_limits<double>::infinity();
}

double AuditReport::loser_deviation() const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates)
        if (c.name != verdict) best = std::min(best, c.max_deviation);
    return best;
}

namespace {

unsigned target_order(AuditTarget target) {
    return target == AuditTarget::Cm4Rhs ? 4u : 3u;
}

void accumulate(AuditTarget target, const OracleTrajectory& oracle,
                std::vector<AuditCandidate>& candidates) {
    for (std::size_t i = 0; i < oracle.samples.size(); ++i) {
        const ReducedJet& jet = oracle.samples[i];
        const AngularTower& lt = oracle.towers[i];
        const double q = jet.q(0), qd = jet.q(1), qdd = jet.q(2);

        switch (target) {
            case AuditTarget::Cm3Rhs: {
                // truth: third derivative of the lower eigenvalue
                const double truth = jet.q1[3];
                const double a = -cm3_sigma3_recursion(q, qd, lt.l[0], lt.l[1]);
                const double b = -cm3_sigma3_variant_linear_l1(q, qd, lt.l[0], lt.l[1]);
                candidates[0].max_deviation =
                    std::max(candidates[0].max_deviation, std::abs(a - truth));
                candidates[1].max_deviation =
                    std::max(candidates[1].max_deviation, std::abs(b - truth));
                break;
            }
            case AuditTarget::Cm4Rhs: {
                const double truth = jet.q1[4];
                const double a =
                    -cm4_sigma3_recursion(q, qd, qdd, lt.l[0], lt.l[1], lt.l[2]);
                const double b =
                    -cm4_sigma3_variant_low_qdot_sq(q, qd, qdd, lt.l[0], lt.l[1], lt.l[2]);
                candidates[0].max_deviation =
                    std::max(candidates[0].max_deviation, std::abs(a - truth));
                candidates[1].max_deviation =
                    std::max(candidates[1].max_deviation, std::abs(b - truth));
                break;
            }
            case AuditTarget::ETowerTrace: {
                const double truth = oracle.energies[i].e1;  // (1/2) tr(Xdot^2)
                const double kinetic =
                    0.5 * (jet.q1[1] * jet.q1[1] + jet.q2[1] * jet.q2[1]);
                const double angular = q * q * jet.phidot();
                const double a = kinetic + angular * jet.phidot();  // q^2 phidot^2
                const double b = kinetic + angular;                 // q^2 phidot
                candidates[0].max_deviation =
                    std::max(candidates[0].max_deviation, std::abs(a - truth));
                candidates[1].max_deviation =
                    std::max(candidates[1].max_deviation, std::abs(b - truth));
                break;
            }
            case AuditTarget::E1Order3: {
                const double t = oracle.times[i];
                const EnergyTower& e0 = oracle.energies.front();
                const double law = e0.e1 + e0.e2 * t + 0.5 * e0.e3 * t * t;
                candidates[0].max_deviation = std::max(
                    candidates[0].max_deviation, std::abs(law - oracle.energies[i].e1));
                break;
            }
        }
    }
}

}  // namespace

AuditReport formula_audit(AuditTarget target, std::uint64_t seed, std::size_t ensemble_size,
                          double tolerance) {
    if (ensemble_size == 0) throw Error("formula_audit: empty ensemble");
    AuditReport report;
    report.target = target;
    report.tolerance = tolerance;
    report.seed = seed;
    report.ensemble_size = ensemble_size;

    switch (target) {
        case AuditTarget::Cm3Rhs:
            report.candidates = {{"sigma3_l1sq_velocity", 0.0}, {"sigma3_l1_velocity", 0.0}};
            break;
        case AuditTarget::Cm4Rhs:
            report.candidates = {{"sigma3_recursion", 0.0}, {"sigma3_low_qdot_sq", 0.0}};
            break;
        case AuditTarget::ETowerTrace:
            report.candidates = {{"kinetic_plus_gap_sq_phidot_sq", 0.0},
                                 {"kinetic_plus_gap_sq_phidot", 0.0}};
            break;
        case AuditTarget::E1Order3:
            report.candidates = {{"quadratic_tower_law", 0.0}};
            break;
    }

    SplitMix64 rng(seed);
    const auto grid = uniform_grid(0.0, 1.0, 101);
    for (std::size_t member = 0; member < ensemble_size; ++member) {
        const FreeState s = random_collision_free_state(target_order(target), rng);
        const OracleTrajectory oracle = oracle_trajectory(s, grid);
        accumulate(target, oracle, report.candidates);
    }

    report.verdict = "NONE";
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : report.candidates) {
        if (c.max_deviation < tolerance && c.max_deviation < best) {
            best = c.max_deviation;
            report.verdict = c.name;
        }
    }
    return report;
}

}  // namespace nilflow
