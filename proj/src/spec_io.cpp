#include "nilflow/spec_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "nilflow/errors.hpp"
#include "nilflow/poly_text.hpp"

namespace nilflow {

using nlohmann::json;

std::string to_string(SpecKind kind) {
    switch (kind) {
        case SpecKind::PolyField: return "POLY_FIELD";
        case SpecKind::Linear: return "LINEAR";
        case SpecKind::FreeMatrix: return "FREE_MATRIX";
        case SpecKind::Radial: return "RADIAL";
    }
    return "UNKNOWN";
}

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    // the shortest round-trip decimal of a JSON number keeps its intent exact
    if (j.is_number()) return rational_from_string(j.dump());
    throw Error("expected a rational (string \"p/q\" or number), got " + j.dump());
}

SymMat2 symmat_from_json(const json& j) {
    if (j.is_object()) {
        SymMat2 m;
        m.x = j.value("x", 0.0);
        m.y = j.value("y", 0.0);
        m.z = j.value("z", 0.0);
        return m;
    }
    if (j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 &&
        j[1].is_array() && j[1].size() == 2) {
        const double a11 = j[0][0].get<double>();
        const double a12 = j[0][1].get<double>();
        const double a21 = j[1][0].get<double>();
        const double a22 = j[1][1].get<double>();
        if (a12 != a21) throw Error("free-system jets must be symmetric matrices");
        return SymMat2::from_entries(a11, a12, a22);
    }
    throw Error("a jet must be an {x,y,z} object or a 2x2 row-major matrix");
}

json symmat_to_json(const SymMat2& m) {
    return json{{"x", m.x}, {"y", m.y}, {"z", m.z}};
}

void parse_options(const json& j, AnalysisOptions& options) {
    if (!j.contains("options")) return;
    const json& o = j.at("options");
    options.max_depth = o.value("max_depth", options.max_depth);
    options.degree_bound = o.value("degree_bound", options.degree_bound);
}

SystemSpec parse_spec_json(const json& j) {
    if (!j.is_object()) throw Error("spec must be a JSON object");
    if (!j.contains("kind")) throw Error("spec is missing the \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();

    SystemSpec spec;
    parse_options(j, spec.options);

    if (kind == "POLY_FIELD") {
        spec.kind = SpecKind::PolyField;
        PolyFieldSpec p;
        p.coordinates = j.at("coordinates").get<std::vector<std::string>>();
        if (p.coordinates.empty()) throw Error("POLY_FIELD needs at least one coordinate");
        p.component_text = j.at("components").get<std::vector<std::string>>();
        if (p.component_text.size() != p.coordinates.size())
            throw DimensionMismatchError("POLY_FIELD needs one component per coordinate");
        for (const auto& text : p.component_text)
            p.components.push_back(parse_polynomial(text, p.coordinates));
        spec.payload = std::move(p);
        return spec;
    }
    if (kind == "LINEAR") {
        spec.kind = SpecKind::Linear;
        LinearSpec l;
        const json& rows = j.at("matrix");
        if (!rows.is_array() || rows.empty()) throw Error("LINEAR needs a matrix");
        const std::size_t n = rows.size();
        l.matrix = RationalMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != n)
                throw DimensionMismatchError("LINEAR matrix must be square");
            for (std::size_t k = 0; k < n; ++k)
                l.matrix.at(i, k) = rational_from_json(rows[i][k]);
        }
        if (j.contains("coordinates")) {
            l.coordinates = j.at("coordinates").get<std::vector<std::string>>();
            if (l.coordinates.size() != n)
                throw DimensionMismatchError("LINEAR coordinate count must match the matrix");
        } else {
            for (std::size_t i = 1; i <= n; ++i)
                l.coordinates.push_back("x" + std::to_string(i));
        }
        spec.payload = std::move(l);
        return spec;
    }
    if (kind == "FREE_MATRIX") {
        spec.kind = SpecKind::FreeMatrix;
        FreeMatrixSpec f;
        f.state.order = j.at("order").get<unsigned>();
        for (const auto& jet : j.at("jets")) f.state.jets.push_back(symmat_from_json(jet));
        f.state.validate();
        if (j.contains("raw_reduced")) {
            const json& r = j.at("raw_reduced");
            RawReduced raw;
            raw.q1 = r.at("q1").get<std::vector<double>>();
            raw.q2 = r.at("q2").get<std::vector<double>>();
            raw.phi = r.value("phi", 0.0);
            raw.tower = r.at("tower").get<std::vector<double>>();
            f.raw_reduced = std::move(raw);
        }
        spec.payload = std::move(f);
        return spec;
    }
    if (kind == "RADIAL") {
        spec.kind = SpecKind::Radial;
        RadialSpec r;
        r.order = j.at("order").get<unsigned>();
        if (r.order == 2) {
            r.p2.alpha = j.at("alpha").get<double>();
            r.p2.l1_sq = j.at("l1_sq").get<double>();
            r.p2.e1 = j.at("e1").get<double>();
        } else if (r.order == 3) {
            r.p3.a_sq = j.at("a_sq").get<double>();
            r.p3.c = j.at("c").get<double>();
        } else {
            throw Error("RADIAL order must be 2 or 3");
        }
        const json& init = j.at("initial");
        r.initial.push_back(init.at("r").get<double>());
        r.initial.push_back(init.at("rdot").get<double>());
        if (r.order == 3) r.initial.push_back(init.at("rddot").get<double>());
        spec.payload = std::move(r);
        return spec;
    }
    throw Error("invalid spec kind \"" + kind +
                "\" (expected POLY_FIELD, LINEAR, FREE_MATRIX or RADIAL)");
}

}  // namespace

SystemSpec parse_spec_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("spec syntax error: ") + e.what(), e.byte);
    }
    return parse_spec_json(j);
}

SystemSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open spec file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
}

json serialize_spec(const SystemSpec& spec) {
    json j;
    j["kind"] = to_string(spec.kind);
    j["options"] = {{"max_depth", spec.options.max_depth},
                    {"degree_bound", spec.options.degree_bound}};
    switch (spec.kind) {
        case SpecKind::PolyField: {
            const auto& p = spec.poly_field();
            j["coordinates"] = p.coordinates;
            std::vector<std::string> comps;
            for (const auto& c : p.components) comps.push_back(c.to_string());
            j["components"] = comps;
            break;
        }
        case SpecKind::Linear: {
            const auto& l = spec.linear();
            j["coordinates"] = l.coordinates;
            j["matrix"] = to_json(l.matrix);
            break;
        }
        case SpecKind::FreeMatrix: {
            const auto& f = spec.free_matrix();
            j["order"] = f.state.order;
            json jets = json::array();
            for (const auto& m : f.state.jets) jets.push_back(symmat_to_json(m));
            j["jets"] = jets;
            if (f.raw_reduced) {
                j["raw_reduced"] = {{"q1", f.raw_reduced->q1},
                                    {"q2", f.raw_reduced->q2},
                                    {"phi", f.raw_reduced->phi},
                                    {"tower", f.raw_reduced->tower}};
            }
            break;
        }
        case SpecKind::Radial: {
            const auto& r = spec.radial();
            j["order"] = r.order;
            if (r.order == 2) {
                j["alpha"] = r.p2.alpha;
                j["l1_sq"] = r.p2.l1_sq;
                j["e1"] = r.p2.e1;
                j["initial"] = {{"r", r.initial[0]}, {"rdot", r.initial[1]}};
            } else {
                j["a_sq"] = r.p3.a_sq;
                j["c"] = r.p3.c;
                j["initial"] = {{"r", r.initial[0]},
                                {"rdot", r.initial[1]},
                                {"rddot", r.initial[2]}};
            }
            break;
        }
    }
    return j;
}

bool spec_equal(const SystemSpec& a, const SystemSpec& b) {
    return serialize_spec(a) == serialize_spec(b);
}

json to_json(const NilpotencyReport& report) {
    json j;
    j["verdict"] = report.strict ? "STRICT" : "NOT_STRICT_WITHIN_DEPTH";
    j["max_depth"] = report.max_depth;
    json coords = json::array();
    for (const auto& e : report.entries) {
        json c;
        c["coordinate"] = e.coordinate;
        if (e.index) {
            c["index"] = *e.index;
        } else {
            c["index"] = "NOT_NILPOTENT_WITHIN_DEPTH";
        }
        if (e.flow) {
            json coeffs = json::array();
            for (const auto& p : e.flow->coefficients) coeffs.push_back(p.to_string());
            c["flow_coefficients"] = coeffs;
            c["flow"] = e.flow->to_string();
        }
        coords.push_back(std::move(c));
    }
    j["coordinates"] = std::move(coords);
    return j;
}

json to_json(const AuditReport& report) {
    json j;
    j["target"] = to_string(report.target);
    j["tolerance"] = report.tolerance;
    j["seed"] = report.seed;
    j["ensemble_size"] = report.ensemble_size;
    json cands = json::array();
    for (const auto& c : report.candidates)
        cands.push_back({{"name", c.name}, {"max_deviation", c.max_deviation}});
    j["candidates"] = std::move(cands);
    j["verdict"] = report.verdict;
    return j;
}

json to_json(const ReductionComparison& report) {
    json j;
    j["order"] = report.order;
    j["t_end"] = report.t_end;
    j["tol"] = report.tol;
    j["max_error"] = report.max_error;
    j["samples"] = report.samples;
    j["pass"] = report.pass;
    j["collision"] = report.collision;
    if (report.collision_time) j["collision_time"] = *report.collision_time;
    return j;
}

json trajectory_to_json(const Trajectory& traj, const std::vector<std::string>& columns) {
    json j;
    j["columns"] = columns;
    j["times"] = traj.times;
    json states = json::array();
    for (const auto& s : traj.states) states.push_back(s);
    j["states"] = std::move(states);
    switch (traj.status) {
        case TrajectoryStatus::Ok: j["status"] = "OK"; break;
        case TrajectoryStatus::Singularity: j["status"] = "SINGULARITY"; break;
        case TrajectoryStatus::StiffOrSingular: j["status"] = "STIFF_OR_SINGULAR"; break;
    }
    if (traj.failure_time) j["failure_time"] = *traj.failure_time;
    return j;
}

std::string trajectory_to_csv(const Trajectory& traj,
                              const std::vector<std::string>& columns) {
    std::ostringstream out;
    out << "t";
    for (const auto& c : columns) out << "," << c;
    out << "\n";
    char buf[32];
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", traj.times[i]);
        out << buf;
        for (const double v : traj.states[i]) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << "," << buf;
        }
        out << "\n";
    }
    return out.str();
}

json to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const JordanChevalley& jc) {
    return json{{"semisimple", to_json(jc.semisimple)}, {"nilpotent", to_json(jc.nilpotent)}};
}

}  // namespace nilflow
