#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "nilflow/spec_io.hpp"

namespace nilflow {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;       // a verdict failed
inline constexpr int kExitInput = 2;      // malformed spec / arguments
inline constexpr int kExitSingular = 3;   // singular abort (collision, stiffness)

struct RunFlags {
    std::optional<unsigned> max_depth;
    std::optional<unsigned> degree_bound;
    std::optional<unsigned> order;
    double t_end = 1.0;
    double tol = 1e-8;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    std::optional<double> step;  // fixed-step mode when set
    std::size_t grid = 101;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::string> out_path;
    std::string format = "json";  // trajectory output: "csv" or "json"
    std::optional<double> l1_override;
    bool allow_raw_initial = false;
    std::optional<std::string> audit_target;  // default: all targets
};

// Executes one batch command against a parsed spec. Reports go to `out`
// (or the --out file), diagnostics to `err`. Returns the exit code.
int run_command(const std::string& command, const SystemSpec& spec, const RunFlags& flags,
                std::ostream& out, std::ostream& err);

// Full argv-level entry point (subcommand parsing included).
int cli_main(int argc, const char* const* argv);

}  // namespace nilflow
