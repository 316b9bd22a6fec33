#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "nilflow/audit.hpp"
#include "nilflow/free_system.hpp"
#include "nilflow/linear_systems.hpp"
#include "nilflow/nilpotent.hpp"
#include "nilflow/oracle.hpp"
#include "nilflow/radial.hpp"
#include "nilflow/vector_field.hpp"

namespace nilflow {

enum class SpecKind { PolyField, Linear, FreeMatrix, Radial };

std::string to_string(SpecKind kind);

struct PolyFieldSpec {
    std::vector<std::string> coordinates;
    std::vector<std::string> component_text;  // original text, kept for round-trips
    std::vector<Polynomial> components;

    VectorField field() const { return VectorField(coordinates, components); }
};

struct LinearSpec {
    std::vector<std::string> coordinates;  // defaults to x1..xn
    RationalMatrix matrix;
};

// Optional raw reduced initial data for an order-3 run; accepted only with
// the explicit override flag when off the constraint manifold.
struct RawReduced {
    std::vector<double> q1;  // value and derivatives
    std::vector<double> q2;
    double phi = 0.0;
    std::vector<double> tower;
};

struct FreeMatrixSpec {
    FreeState state;
    std::optional<RawReduced> raw_reduced;
};

struct RadialSpec {
    unsigned order = 2;
    RadialParams2 p2;
    RadialParams3 p3;
    std::vector<double> initial;  // (r, rdot) or (r, rdot, rddot)
};

struct AnalysisOptions {
    unsigned max_depth = kDefaultMaxDepth;
    unsigned degree_bound = 3;
};

struct SystemSpec {
    SpecKind kind = SpecKind::PolyField;
    std::variant<PolyFieldSpec, LinearSpec, FreeMatrixSpec, RadialSpec> payload;
    AnalysisOptions options;

    const PolyFieldSpec& poly_field() const { return std::get<PolyFieldSpec>(payload); }
    const LinearSpec& linear() const { return std::get<LinearSpec>(payload); }
    const FreeMatrixSpec& free_matrix() const { return std::get<FreeMatrixSpec>(payload); }
    const RadialSpec& radial() const { return std::get<RadialSpec>(payload); }
};

SystemSpec parse_spec_text(const std::string& text);
SystemSpec parse_spec_file(const std::string& path);
nlohmann::json serialize_spec(const SystemSpec& spec);

// Exact JSON-level equality of two specs (used for round-trip checks).
bool spec_equal(const SystemSpec& a, const SystemSpec& b);

// --- report serialization ---

nlohmann::json to_json(const NilpotencyReport& report);
nlohmann::json to_json(const AuditReport& report);
nlohmann::json to_json(const ReductionComparison& report);
nlohmann::json trajectory_to_json(const Trajectory& traj,
                                  const std::vector<std::string>& columns);
std::string trajectory_to_csv(const Trajectory& traj, const std::vector<std::string>& columns);

nlohmann::json to_json(const RationalMatrix& m);
nlohmann::json to_json(const JordanChevalley& jc);

}  // namespace nilflow
