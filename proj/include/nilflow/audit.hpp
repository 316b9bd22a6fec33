#pragma once

#include <string>
#include <vector>

#include "nilflow/oracle.hpp"

namespace nilflow {

// Formula audits: alternative closed forms of the reduced right-hand sides
// and reduced-coordinate energies are evaluated along an ensemble of exact
// free-flow trajectories, and only a form matching the ground truth within
// the audit tolerance becomes canonical. A NONE verdict is a reportable
// outcome, not an error.
enum class AuditTarget { E1Order3, Cm3Rhs, Cm4Rhs, ETowerTrace };

std::string to_string(AuditTarget target);
AuditTarget audit_target_from_string(const std::string& name);

struct AuditCandidate {
    std::string name;
    double max_deviation = 0.0;
};

struct AuditReport {
    AuditTarget target = AuditTarget::Cm3Rhs;
    std::vector<AuditCandidate> candidates;
    std::string verdict;  // candidate name, or "NONE"
    double tolerance = 1e-9;
    std::uint64_t seed = kDefaultSeed;
    std::size_t ensemble_size = 5;

    bool decided() const { return verdict != "NONE"; }
    // Smallest deviation among the losing candidates (infinity if none).
    double loser_deviation() const;
    double winner_deviation() const;
};

AuditReport formula_audit(AuditTarget target, std::uint64_t seed = kDefaultSeed,
                          std::size_t ensemble_size = 5, double tolerance = 1e-9);

}  // namespace nilflow
