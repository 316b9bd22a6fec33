#include "nilflow/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "nilflow/errors.hpp"
#include "nilflow/reduced_forms.hpp"

namespace nilflow {

using nlohmann::json;

namespace {

void emit(const RunFlags& flags, std::ostream& out, const std::string& text) {
    if (flags.out_path) {
        std::ofstream file(*flags.out_path);
        if (!file) throw Error("cannot open output file: " + *flags.out_path);
        file << text;
        return;
    }
    out << text;
}

void emit_json(const RunFlags& flags, std::ostream& out, const json& j) {
    emit(flags, out, j.dump(2) + "\n");
}

unsigned depth_of(const SystemSpec& spec, const RunFlags& flags) {
    return flags.max_depth.value_or(spec.options.max_depth);
}

int do_analyze(const SystemSpec& spec, const RunFlags& flags, std::ostream& out,
               std::ostream& err) {
    json j;
    j["command"] = "analyze";
    j["kind"] = to_string(spec.kind);
    NilpotencyReport report;
    if (spec.kind == SpecKind::PolyField) {
        report = strict_integrability_report(spec.poly_field().field(), depth_of(spec, flags));
    } else if (spec.kind == SpecKind::Linear) {
        const auto& l = spec.linear();
        report = strict_integrability_report(
            linear_vector_field(l.matrix, l.coordinates), depth_of(spec, flags));
        j["jordan_chevalley"] = to_json(jordan_chevalley(l.matrix));
        const auto chain = commutant_chain({l.matrix}, l.matrix.rows(), 4);
        j["commutant_chain"] = {{"dims", chain.dims},
                                {"first_stable", chain.first_stable},
                                {"second_stable", chain.second_stable}};
    } else {
        err << "analyze needs a POLY_FIELD or LINEAR spec\n";
        return kExitInput;
    }
    j["report"] = to_json(report);
    emit_json(flags, out, j);
    return report.strict ? kExitOk : kExitFail;
}

// Canonical right-hand-side form names, fixed by the audits.
std::string rhs_form_name(unsigned order) {
    switch (order) {
        case 2: return "sigma3_centrifugal";
        case 3: return "sigma3_l1sq_velocity";
        default: return "sigma3_recursion";
    }
}

json reduced_jet_to_json(const ReducedJet& jet, unsigned order) {
    json j;
    std::vector<double> q1(jet.q1.begin(), jet.q1.begin() + order);
    std::vector<double> q2(jet.q2.begin(), jet.q2.begin() + order);
    j["q1"] = q1;
    j["q2"] = q2;
    j["phi"] = jet.phi;
    j["phidot"] = jet.phidot();
    return j;
}

struct ReducedSetup {
    ReducedJet jet;
    AngularTower tower;
    bool warned = false;
};

ReducedSetup reduced_setup(const FreeMatrixSpec& f, const RunFlags& flags,
                           std::ostream& err) {
    ReducedSetup setup;
    if (f.raw_reduced) {
        const auto& raw = *f.raw_reduced;
        if (raw.q1.size() < f.state.order || raw.q2.size() < f.state.order)
            throw Error("raw_reduced: need q jets up to order-1 derivatives");
        setup.jet.order = f.state.order;
        setup.jet.q1 = raw.q1;
        setup.jet.q2 = raw.q2;
        setup.jet.q1.resize(kJetLen, 0.0);
        setup.jet.q2.resize(kJetLen, 0.0);
        setup.jet.phi = raw.phi;
        setup.jet.phi_jets = {raw.phi, 0.0};
        setup.tower.l = raw.tower;
        if (setup.tower.l.size() != 2 * f.state.order - 3)
            throw Error("raw_reduced: tower must have 2*order-3 levels");
        if (f.state.order >= 3) {
            setup.warned = check_order3_initial(setup.jet, setup.tower,
                                                flags.allow_raw_initial);
            if (setup.warned)
                err << "warning: raw initial data is off the constraint manifold\n";
        }
    } else {
        setup.jet = reduce_at(f.state, 0.0);
        setup.tower = angular_tower(f.state, 0.0);
    }
    if (flags.l1_override) setup.tower.l[0] = *flags.l1_override;
    return setup;
}

int do_reduce(const SystemSpec& spec, const RunFlags& flags, std::ostream& out,
              std::ostream& err) {
    if (spec.kind != SpecKind::FreeMatrix) {
        err << "reduce needs a FREE_MATRIX spec\n";
        return kExitInput;
    }
    const auto& f = spec.free_matrix();
    const ReducedSetup setup = reduced_setup(f, flags, err);

    json j;
    j["command"] = "reduce";
    j["order"] = f.state.order;
    j["initial"] = reduced_jet_to_json(setup.jet, f.state.order);
    j["angular_tower"] = setup.tower.l;
    j["rhs_form"] = rhs_form_name(f.state.order);
    if (f.state.order >= 3) {
        const EnergyTower e = energy_tower(f.state, 0.0);
        j["energy_tower"] = {e.e1, e.e2, e.e3};
        j["constraint_residual"] = constraint_residual(setup.jet, setup.tower);
        const AccelCoefficients c = accel_coefficients(f.state);
        j["acceleration_coefficients"] = {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}};
    }
    if (f.state.order == 4)
        j["order4_constraint_residual"] = order4_constraint_residual(setup.jet, setup.tower);
    emit_json(flags, out, j);
    return kExitOk;
}

IntegratorConfig integrator_config(const RunFlags& flags, double t_end) {
    IntegratorConfig cfg;
    if (flags.step) {
        cfg.mode = IntegratorMode::FixedRk4;
        cfg.step = *flags.step;
    }
    cfg.rel_tol = flags.rel_tol;
    cfg.abs_tol = flags.abs_tol;
    cfg.samples = flags.grid;
    cfg.max_step = t_end;
    return cfg;
}

// State layout [q1, q2, q1', q2', ..., phi]: the reduced system plus the
// transported angle phidot = l1(t)/q^2.
OdeProblem augmented_problem(unsigned order, const ReducedJet& jet,
                             const AngularTower& tower) {
    OdeProblem p;
    p.dimension = 2 * order + 1;
    p.t0 = 0.0;
    p.y0 = reduced_state(jet, order);
    p.y0.push_back(jet.phi);
    const RhsFn base = cm_rhs(order, tower);
    const AngularTower tower0 = tower;
    p.rhs = [base, order, tower0](double t, std::span<const double> y,
                                  std::span<double> dy) {
        base(t, y.subspan(0, 2 * order), dy.subspan(0, 2 * order));
        const double q = y[1] - y[0];
        dy[2 * order] = tower_at_time(tower0, t).l[0] / (q * q);
    };
    return p;
}

std::vector<std::string> reduced_columns(unsigned order) {
    std::vector<std::string> cols{"q1", "q2", "phi"};
    static const char* suffix[] = {"", "dot", "ddot", "dddot"};
    for (unsigned k = 1; k < order; ++k) {
        cols.push_back("q1" + std::string(suffix[k]));
        cols.push_back("q2" + std::string(suffix[k]));
    }
    return cols;
}

// Reorder integration states (pairs..., phi) into output order (q1, q2, phi,
// derivative pairs).
Trajectory reorder_for_output(const Trajectory& traj, unsigned order) {
    Trajectory out = traj;
    for (auto& s : out.states) {
        std::vector<double> row;
        row.push_back(s[0]);
        row.push_back(s[1]);
        row.push_back(s[2 * order]);
        for (std::size_t k = 2; k < 2 * order; ++k) row.push_back(s[k]);
        s = std::move(row);
    }
    return out;
}

int emit_trajectory(const Trajectory& traj, const std::vector<std::string>& columns,
                    const RunFlags& flags, std::ostream& out, std::ostream& err) {
    if (flags.format == "csv") {
        emit(flags, out, trajectory_to_csv(traj, columns));
    } else {
        emit_json(flags, out, trajectory_to_json(traj, columns));
    }
    if (traj.status != TrajectoryStatus::Ok) {
        err << "integration stopped at t = "
            << (traj.failure_time ? *traj.failure_time : traj.times.back())
            << (traj.status == TrajectoryStatus::Singularity ? " (singularity)\n"
                                                             : " (stiff or singular)\n");
        return kExitSingular;
    }
    return kExitOk;
}

int do_simulate(const SystemSpec& spec, const RunFlags& flags, std::ostream& out,
                std::ostream& err) {
    const IntegratorConfig cfg = integrator_config(flags, flags.t_end);
    if (spec.kind == SpecKind::FreeMatrix) {
        const auto& f = spec.free_matrix();
        const ReducedSetup setup = reduced_setup(f, flags, err);
        const OdeProblem p = augmented_problem(f.state.order, setup.jet, setup.tower);
        const Trajectory traj = integrate(p, cfg, flags.t_end);
        return emit_trajectory(reorder_for_output(traj, f.state.order),
                               reduced_columns(f.state.order), flags, out, err);
    }
    if (spec.kind == SpecKind::Radial) {
        const auto& r = spec.radial();
        OdeProblem p;
        p.dimension = r.initial.size();
        p.t0 = 0.0;
        p.y0 = r.initial;
        std::vector<std::string> columns{"r", "rdot"};
        if (r.order == 2) {
            p.rhs = radial_rhs(r.p2);
        } else {
            p.rhs = radial_rhs(r.p3);
            columns.push_back("rddot");
        }
        const Trajectory traj = integrate(p, cfg, flags.t_end);
        return emit_trajectory(traj, columns, flags, out, err);
    }
    err << "simulate needs a FREE_MATRIX or RADIAL spec\n";
    return kExitInput;
}

int do_verify(const SystemSpec& spec, const RunFlags& flags, std::ostream& out,
              std::ostream& err) {
    if (spec.kind != SpecKind::FreeMatrix) {
        err << "verify needs a FREE_MATRIX spec\n";
        return kExitInput;
    }
    const auto& f = spec.free_matrix();
    if (flags.order && *flags.order != f.state.order) {
        err << "verify: --order " << *flags.order << " does not match the spec order "
            << f.state.order << "\n";
        return kExitInput;
    }
    IntegratorConfig cfg = integrator_config(flags, flags.t_end);
    const ReductionComparison report = compare_reduction(f.state, flags.t_end, flags.tol, cfg);
    json j;
    j["command"] = "verify";
    j["report"] = to_json(report);
    emit_json(flags, out, j);
    if (report.collision) return kExitSingular;
    return report.pass ? kExitOk : kExitFail;
}

int do_audit(const RunFlags& flags, std::ostream& out, std::ostream& err) {
    std::vector<AuditTarget> targets;
    if (flags.audit_target) {
        targets.push_back(audit_target_from_string(*flags.audit_target));
    } else {
        targets = {AuditTarget::Cm3Rhs, AuditTarget::Cm4Rhs, AuditTarget::ETowerTrace,
                   AuditTarget::E1Order3};
    }
    json reports = json::array();
    bool all_decided = true;
    for (const AuditTarget t : targets) {
        const AuditReport report = formula_audit(t, flags.seed);
        all_decided = all_decided && report.decided();
        if (!report.decided())
            err << "audit " << to_string(t) << ": no candidate matched the trajectory ensemble\n";
        reports.push_back(to_json(report));
    }
    json j;
    j["command"] = "audit";
    j["reports"] = std::move(reports);
    emit_json(flags, out, j);
    return all_decided ? kExitOk : kExitFail;
}

}  // namespace

int run_command(const std::string& command, const SystemSpec& spec, const RunFlags& flags,
                std::ostream& out, std::ostream& err) {
    try {
        if (command == "analyze") return do_analyze(spec, flags, out, err);
        if (command == "reduce") return do_reduce(spec, flags, out, err);
        if (command == "simulate") return do_simulate(spec, flags, out, err);
        if (command == "verify") return do_verify(spec, flags, out, err);
        if (command == "audit") return do_audit(flags, out, err);
        err << "unknown command: " << command << "\n";
        return kExitInput;
    } catch (const SingularityError& e) {
        err << "singular abort: " << e.what() << "\n";
        return kExitSingular;
    } catch (const DegenerateError& e) {
        err << "singular abort: " << e.what() << "\n";
        return kExitSingular;
    } catch (const ConstraintError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"nilflow: towers of higher-order constants of motion, polynomial flows,\n"
                 "commutant analysis, and reduced Calogero-Moser systems"};
    app.require_subcommand(1);

    RunFlags flags;
    std::string spec_path;

    const auto add_common = [&](CLI::App* cmd, bool spec_required) {
        auto* pos = cmd->add_option("spec", spec_path, "system spec (JSON)");
        if (spec_required) pos->required();
        unsigned tmp_depth = 0, tmp_bound = 0, tmp_order = 0;
        cmd->add_option_function<unsigned>(
               "--max-depth", [&flags](unsigned v) { flags.max_depth = v; },
               "nilpotency search depth");
        cmd->add_option_function<unsigned>(
               "--degree-bound", [&flags](unsigned v) { flags.degree_bound = v; },
               "polynomial degree bound for filtrations");
        cmd->add_option_function<unsigned>(
               "--order", [&flags](unsigned v) { flags.order = v; }, "system order");
        cmd->add_option("--t-end", flags.t_end, "final time");
        cmd->add_option("--tol", flags.tol, "verification tolerance");
        cmd->add_option("--rel-tol", flags.rel_tol, "integrator relative tolerance");
        cmd->add_option("--abs-tol", flags.abs_tol, "integrator absolute tolerance");
        cmd->add_option_function<double>(
               "--step", [&flags](double v) { flags.step = v; },
               "fixed step size (switches to the fixed-step integrator)");
        cmd->add_option("--grid", flags.grid, "sample count");
        cmd->add_option("--seed", flags.seed, "random seed for ensembles");
        cmd->add_option_function<std::string>(
               "--out", [&flags](const std::string& v) { flags.out_path = v; },
               "output file (default: stdout)");
        cmd->add_option("--format", flags.format, "trajectory format: csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option_function<double>(
               "--l1", [&flags](double v) { flags.l1_override = v; },
               "override the angular-momentum level l1");
        cmd->add_flag("--allow-raw-initial", flags.allow_raw_initial,
                      "accept off-manifold raw initial data (with a warning)");
        (void)tmp_depth;
        (void)tmp_bound;
        (void)tmp_order;
    };

    add_common(app.add_subcommand("analyze", "nilpotency report and polynomial flows"), true);
    add_common(app.add_subcommand("reduce", "reduced initial data and towers"), true);
    add_common(app.add_subcommand("simulate", "integrate a reduced system"), true);
    add_common(app.add_subcommand("verify", "compare a reduction against the exact flow"),
               true);
    auto* audit_cmd =
        app.add_subcommand("audit", "cross-check alternative closed forms on exact flows");
    add_common(audit_cmd, false);
    audit_cmd
        ->add_option_function<std::string>(
            "--target", [&flags](const std::string& v) { flags.audit_target = v; },
            "one of CM3_RHS, CM4_RHS, E_TOWER_TRACE, E1_ORDER3")
        ->check(CLI::IsMember({"CM3_RHS", "CM4_RHS", "E_TOWER_TRACE", "E1_ORDER3"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    SystemSpec spec;
    if (!spec_path.empty()) {
        try {
            spec = parse_spec_file(spec_path);
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInput;
        }
    } else if (command != "audit") {
        std::cerr << "error: " << command << " needs a spec file\n";
        return kExitInput;
    }
    return run_command(command, spec, flags, std::cout, std::cerr);
}

}  // namespace nilflow
