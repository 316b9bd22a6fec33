#include "nilflow/reduced_forms.hpp"

#include <cmath>

#include "nilflow/errors.hpp"
#include "nilflow/vector_field.hpp"

namespace nilflow {

namespace {

// Ring coordinates: angular tower, eigenvalue-gap jets, u = 1/q0.
const std::vector<std::string>& ring_coords() {
    static const std::vector<std::string> coords{"l1", "l2", "l3", "l4", "l5", "q0",
                                                 "q1", "q2", "q3", "q4", "u"};
    return coords;
}

constexpr std::size_t kL = 0;   // l1 at index 0
constexpr std::size_t kQ = 5;   // q0 at index 5
constexpr std::size_t kU = 10;  // u

// Normal form modulo u*q0 = 1: cancel matched powers of u and q0.
Polynomial reduce_uq(const Polynomial& p) {
    Polynomial out = Polynomial::zero(p.coords());
    for (const auto& [e, c] : p.terms()) {
        Exponents ne = e;
        const auto k = std::min(ne[kU], ne[kQ]);
        ne[kU] -= k;
        ne[kQ] -= k;
        out = out + Polynomial::monomial(p.coords(), std::move(ne), c);
    }
    return out;
}

// Total time derivative: l_j -> l_{j+1}, q_j -> q_{j+1}, u -> -u^2 q1.
const VectorField& ring_derivation() {
    static const VectorField gamma = [] {
        const auto& coords = ring_coords();
        std::vector<Polynomial> comps;
        for (std::size_t j = 0; j < 4; ++j)
            comps.push_back(Polynomial::variable(coords, kL + j + 1));
        comps.push_back(Polynomial::zero(coords));  // l5 is the top level
        for (std::size_t j = 0; j < 4; ++j)
            comps.push_back(Polynomial::variable(coords, kQ + j + 1));
        comps.push_back(Polynomial::zero(coords));  // q4: never differentiated
        // u' = -u^2 q1
        comps.push_back(Polynomial::monomial(coords, [] {
            Exponents e(ring_coords().size(), 0);
            e[kU] = 2;
            e[kQ + 1] = 1;
            return e;
        }(), Rational(-1)));
        return VectorField(coords, std::move(comps));
    }();
    return gamma;
}

Polynomial ring_var(std::size_t index) { return Polynomial::variable(ring_coords(), index); }

}  // namespace

const ReducedMForms& reduced_m_forms() {
    static const ReducedMForms forms = [] {
        ReducedMForms f;
        f.coords = ring_coords();
        f.m3.resize(5, Polynomial::zero(f.coords));
        f.m1.resize(5, Polynomial::zero(f.coords));

        const VectorField& d = ring_derivation();
        const Polynomial phidot = reduce_uq(ring_var(kL) * ring_var(kU).pow(2));  // l1 u^2

        // M^(1) = Qdot + (q phidot) sigma1
        f.m1[1] = reduce_uq(phidot * ring_var(kQ));
        for (unsigned k = 1; k <= 3; ++k) {
            const Polynomial qk = ring_var(kQ + k);  // k-th derivative of the gap
            f.m3[k + 1] = reduce_uq(d.apply(f.m3[k]) + phidot * f.m1[k] * Rational(2));
            f.m1[k + 1] =
                reduce_uq(d.apply(f.m1[k]) + phidot * (qk - f.m3[k] * Rational(2)));
        }
        return f;
    }();
    return forms;
}

double eval_reduced_form(const Polynomial& form, std::span<const double> gap_jets,
                         std::span<const double> tower, double t_for_error) {
    std::vector<double> point(ring_coords().size(), 0.0);
    for (std::size_t j = 0; j < 5 && j < tower.size(); ++j) point[kL + j] = tower[j];
    for (std::size_t j = 0; j < 5 && j < gap_jets.size(); ++j) point[kQ + j] = gap_jets[j];
    if (gap_jets.empty() || gap_jets[0] <= 0.0)
        throw SingularityError("collision: eigenvalue gap is not positive", t_for_error);
    point[kU] = 1.0 / gap_jets[0];
    return form.evaluate(std::span<const double>(point));
}

MComponents m_components(unsigned order, const ReducedJet& jet, const AngularTower& tower) {
    if (order < 2 || order > 4) throw Error("m_components: order must be 2, 3 or 4");
    std::vector<double> gap;
    for (std::size_t k = 0; k < jet.q1.size(); ++k) gap.push_back(jet.q(k));
    const auto& forms = reduced_m_forms();
    MComponents out;
    out.m3 = eval_reduced_form(forms.m3[order], gap, tower.l, jet.t);
    out.m1 = eval_reduced_form(forms.m1[order], gap, tower.l, jet.t);
    return out;
}

double cm3_sigma3_recursion(double q, double qd, double l1, double l2) {
    return 6 * l1 * l2 / (q * q * q) - 6 * l1 * l1 * qd / (q * q * q * q);
}

double cm3_sigma3_variant_linear_l1(double q, double qd, double l1, double l2) {
    return 6 * l1 * l2 / (q * q * q) - 6 * l1 * qd / (q * q * q * q);
}

double cm4_sigma3_recursion(double q, double qd, double qdd, double l1, double l2,
                            double l3) {
    const double q3 = q * q * q, q4 = q3 * q, q5 = q4 * q, q7 = q5 * q * q;
    return (6 * l2 * l2 + 8 * l1 * l3) / q3 - (32 * l1 * l2 * qd + 4 * l1 * l1 * qdd) / q4 +
           24 * l1 * l1 * qd * qd / q5 - 8 * l1 * l1 * l1 * l1 / q7;
}

double cm4_sigma3_variant_low_qdot_sq(double q, double qd, double qdd, double l1, double l2,
                                      double l3) {
    const double q3 = q * q * q, q4 = q3 * q, q5 = q4 * q, q7 = q5 * q * q;
    return (6 * l2 * l2 + 8 * l1 * l3) / q3 - (4 * l1 * l1 * qdd + 32 * l1 * l2 * qd) / q4 +
           8 * l1 * l1 * qd * qd / q5 - 8 * l1 * l1 * l1 * l1 / q7;
}

AngularTower tower_at_time(const AngularTower& initial, double t) {
    AngularTower out;
    const std::size_t n = initial.l.size();
    out.l.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0, tpow = 1.0, fact = 1.0;
        for (std::size_t i = j; i < n; ++i) {
            acc += initial.l[i] * tpow / fact;
            tpow *= t;
            fact *= static_cast<double>(i - j + 1);
        }
        out.l[j] = acc;
    }
    return out;
}

namespace {

// Flattened monomial evaluator for the integration hot path.
struct CompiledForm {
    struct Term {
        double coef;
        Exponents exps;
    };
    std::vector<Term> terms;

    static CompiledForm from(const Polynomial& p) {
        CompiledForm f;
        for (const auto& [e, c] : p.terms()) f.terms.push_back({to_double(c), e});
        return f;
    }

    double eval(std::span<const double> point) const {
        double acc = 0.0;
        for (const auto& t : terms) {
            double v = t.coef;
            for (std::size_t i = 0; i < t.exps.size(); ++i)
                for (std::uint32_t k = 0; k < t.exps[i]; ++k) v *= point[i];
            acc += v;
        }
        return acc;
    }
};

}  // namespace

RhsFn cm_rhs(unsigned order, const AngularTower& initial_tower) {
    if (order < 2 || order > 4) throw Error("cm_rhs: order must be 2, 3 or 4");
    if (initial_tower.l.size() != 2 * order - 3)
        throw DimensionMismatchError("cm_rhs: tower size must be 2*order - 3");
    const CompiledForm m3 = CompiledForm::from(reduced_m_forms().m3[order]);
    const AngularTower tower0 = initial_tower;

    return [order, m3, tower0](double t, std::span<const double> y, std::span<double> dy) {
        const std::size_t pairs = order;
        if (y.size() != 2 * pairs || dy.size() != 2 * pairs)
            throw DimensionMismatchError("cm_rhs: state size mismatch");
        for (std::size_t j = 0; j + 2 < 2 * pairs; ++j) dy[j] = y[j + 2];

        std::vector<double> point(ring_coords().size(), 0.0);
        const AngularTower lt = tower_at_time(tower0, t);
        for (std::size_t j = 0; j < lt.l.size(); ++j) point[kL + j] = lt.l[j];
        for (std::size_t k = 0; k < pairs; ++k) point[kQ + k] = y[2 * k + 1] - y[2 * k];
        if (point[kQ] <= 0.0)
            throw SingularityError("collision: eigenvalue gap closed", t);
        point[kU] = 1.0 / point[kQ];

        const double top = m3.eval(point);
        dy[2 * pairs - 2] = -top;
        dy[2 * pairs - 1] = top;
    };
}

RhsFn cm2_accel_rhs(double l1, double c1) {
    return [l1, c1](double t, std::span<const double> y, std::span<double> dy) {
        if (y.size() != 4 || dy.size() != 4)
            throw DimensionMismatchError("cm2_accel_rhs: state size mismatch");
        const double q = y[1] - y[0];
        if (q <= 0.0) throw SingularityError("collision: eigenvalue gap closed", t);
        const double f = 2 * l1 * l1 / (q * q * q);
        dy[0] = y[2];
        dy[1] = y[3];
        dy[2] = -f + c1;
        dy[3] = f + c1;
    };
}

double constraint_residual(const ReducedJet& jet, const AngularTower& tower) {
    std::vector<double> gap;
    for (std::size_t k = 0; k < jet.q1.size(); ++k) gap.push_back(jet.q(k));
    return eval_reduced_form(reduced_m_forms().m1[3], gap, tower.l, jet.t);
}

double order4_constraint_residual(const ReducedJet& jet, const AngularTower& tower) {
    std::vector<double> gap;
    for (std::size_t k = 0; k < jet.q1.size(); ++k) gap.push_back(jet.q(k));
    return eval_reduced_form(reduced_m_forms().m1[4], gap, tower.l, jet.t);
}

double hamiltonian_accel(const ReducedJet& jet, double phi, double c1, double c2, double c3,
                         double l1) {
    const double q = jet.q();
    if (q == 0.0) throw SingularityError("collision: eigenvalue gap closed", jet.t);
    const double kinetic = 0.5 * (jet.q1[1] * jet.q1[1] + jet.q2[1] * jet.q2[1]);
    const double centrifugal = l1 * l1 / (q * q);
    const double linear = -c1 * (jet.q1[0] + jet.q2[0]) +
                          q * (-c2 * std::sin(2 * phi) + c3 * std::cos(2 * phi));
    return kinetic + centrifugal + linear;
}

std::vector<double> reduced_state(const ReducedJet& jet, unsigned order) {
    std::vector<double> y;
    for (unsigned k = 0; k < order; ++k) {
        y.push_back(jet.q1.at(k));
        y.push_back(jet.q2.at(k));
    }
    return y;
}

bool check_order3_initial(const ReducedJet& jet, const AngularTower& tower,
                          bool allow_off_manifold, double tolerance) {
    const double residual = std::abs(constraint_residual(jet, tower));
    if (residual <= tolerance) return false;
    if (!allow_off_manifold)
        throw ConstraintError(
            "order-3 initial data violates the invariant-manifold constraint (residual " +
            std::to_string(residual) + "); pass the override to integrate anyway");
    return true;  // caller should warn
}

}  // namespace nilflow
