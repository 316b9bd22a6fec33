#include "nilflow/nilpotent.hpp"

#include <map>
#include <sstream>

#include "nilflow/errors.hpp"
#include "nilflow/rational_linalg.hpp"

namespace nilflow {

Rational FlowPolynomial::evaluate(std::span<const Rational> point, const Rational& t) const {
    Rational acc(0);
    Rational tpow(1);
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        acc += coefficients[j].evaluate(point) * tpow / factorial(static_cast<unsigned>(j));
        tpow *= t;
    }
    return acc;
}

std::string FlowPolynomial::to_string(const std::string& time_symbol) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (coefficients[j].is_zero()) continue;
        const Polynomial scaled =
            coefficients[j] * (Rational(1) / factorial(static_cast<unsigned>(j)));
        if (!first) out << " + ";
        first = false;
        out << "(" << scaled.to_string() << ")";
        if (j >= 1) out << "*" << time_symbol;
        if (j >= 2) out << "^" << j;
    }
    if (first) out << "0";
    return out.str();
}

std::optional<Tower> compute_tower(const VectorField& v, const Polynomial& g,
                                   unsigned max_depth) {
    require_same_coords(v, g);
    if (max_depth == 0) throw Error("compute_tower: max_depth must be >= 1");

    Tower tower;
    tower.levels.push_back(g);
    Polynomial current = g;
    for (unsigned step = 1; step <= max_depth; ++step) {
        Polynomial next = v.apply(current);
        if (next.is_zero()) {
            tower.index = static_cast<unsigned>(tower.levels.size());
            return tower;
        }
        if (step == max_depth) return std::nullopt;
        tower.levels.push_back(next);
        current = std::move(next);
    }
    return std::nullopt;  // unreachable
}

std::optional<FlowPolynomial> flow_polynomial(const VectorField& v, const Polynomial& g,
                                              unsigned max_depth) {
    auto tower = compute_tower(v, g, max_depth);
    if (!tower) return std::nullopt;
    FlowPolynomial flow;
    flow.label = g.to_string();
    flow.coefficients = std::move(tower->levels);
    return flow;
}

NilpotencyReport strict_integrability_report(const VectorField& v, unsigned max_depth) {
    NilpotencyReport report;
    report.max_depth = max_depth;
    report.strict = true;
    const auto& coords = v.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        NilpotencyReport::Entry entry;
        entry.coordinate = coords[i];
        auto tower = compute_tower(v, Polynomial::variable(coords, i), max_depth);
        if (tower) {
            entry.index = tower->index;
            FlowPolynomial flow;
            flow.label = coords[i];
            flow.coefficients = std::move(tower->levels);
            entry.flow = std::move(flow);
        } else {
            report.strict = false;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<Exponents> monomials_up_to_degree(std::size_t coord_count, unsigned degree_bound) {
    std::vector<Exponents> out;
    Exponents current(coord_count, 0);
    // depth-first enumeration; final ordering is canonical graded-lex
    const auto recurse = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos == coord_count) {
            out.push_back(current);
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        current[pos] = 0;
    };
    recurse(recurse, 0, degree_bound);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::vector<Polynomial> filtration_basis(const VectorField& v, unsigned k,
                                         unsigned degree_bound) {
    if (k == 0) throw Error("filtration_basis: k must be >= 1");
    const auto& coords = v.coords();
    const auto basis_monomials = monomials_up_to_degree(coords.size(), degree_bound);

    // image of each basis monomial under k applications of the derivation
    std::vector<Polynomial> images;
    images.reserve(basis_monomials.size());
    for (const auto& exps : basis_monomials) {
        Polynomial p = Polynomial::monomial(coords, exps, Rational(1));
        for (unsigned j = 0; j < k; ++j) p = v.apply(p);
        images.push_back(std::move(p));
    }

    // row index per monomial appearing in any image
    std::map<Exponents, std::size_t, GradedLexLess> row_of;
    for (const auto& img : images)
        for (const auto& [e, c] : img.terms())
            row_of.emplace(e, row_of.size());

    RationalMatrix op(row_of.empty() ? 1 : row_of.size(), basis_monomials.size());
    for (std::size_t col = 0; col < images.size(); ++col)
        for (const auto& [e, c] : images[col].terms()) op.at(row_of.at(e), col) = c;

    std::vector<Polynomial> result;
    for (const auto& vec : nullspace(op)) {
        Polynomial p = Polynomial::zero(coords);
        for (std::size_t col = 0; col < vec.size(); ++col) {
            if (vec[col] == 0) continue;
            p = p + Polynomial::monomial(coords, basis_monomials[col], vec[col]);
        }
        result.push_back(std::move(p));
    }
    return result;
}

}  // namespace nilflow
