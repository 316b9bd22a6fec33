#include "nilflow/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nilflow/errors.hpp"

namespace nilflow {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    const auto deg = [](const Exponents& e) {
        return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    };
    const std::uint64_t da = deg(a), db = deg(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(std::vector<std::string> coords) : coords_(std::move(coords)) {}

Polynomial Polynomial::zero(std::vector<std::string> coords) {
    return Polynomial(std::move(coords));
}

Polynomial Polynomial::constant(std::vector<std::string> coords, const Rational& value) {
    Polynomial p(std::move(coords));
    if (value != 0) p.terms_.emplace(Exponents(p.coords_.size(), 0), value);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> coords, std::size_t index) {
    Polynomial p(std::move(coords));
    if (index >= p.coords_.size())
        throw DimensionMismatchError("variable index out of range");
    Exponents e(p.coords_.size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> coords, const std::string& name) {
    auto it = std::find(coords.begin(), coords.end(), name);
    if (it == coords.end()) throw UnknownCoordinateError(name);
    const std::size_t idx = static_cast<std::size_t>(it - coords.begin());
    return variable(std::move(coords), idx);
}

Polynomial Polynomial::monomial(std::vector<std::string> coords, Exponents exps,
                                const Rational& coef) {
    Polynomial p(std::move(coords));
    if (exps.size() != p.coords_.size())
        throw DimensionMismatchError("exponent vector length != coordinate count");
    if (coef != 0) p.terms_.emplace(std::move(exps), coef);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](std::uint32_t e) { return e == 0; }));
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // graded order: the last term has maximal total degree
    const Exponents& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

Rational Polynomial::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    return coefficient(Exponents(coords_.size(), 0));
}

void Polynomial::add_term(const Exponents& exps, const Rational& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(coords_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_coords(*this, rhs);
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    require_same_coords(*this, rhs);
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_coords(*this, rhs);
    Polynomial out(coords_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    Polynomial out(coords_);
    if (scalar == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
    return out;
}

Polynomial Polynomial::pow(unsigned exp) const {
    Polynomial result = Polynomial::constant(coords_, Rational(1));
    Polynomial base = *this;
    while (exp > 0) {
        if (exp & 1u) result = result * base;
        exp >>= 1u;
        if (exp > 0) base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return coords_ == rhs.coords_ && terms_ == rhs.terms_;
}

Polynomial Polynomial::partial(std::size_t coord_index) const {
    if (coord_index >= coords_.size())
        throw DimensionMismatchError("partial: coordinate index out of range");
    Polynomial out(coords_);
    for (const auto& [e, c] : terms_) {
        if (e[coord_index] == 0) continue;
        Exponents d = e;
        d[coord_index] -= 1;
        out.add_term(d, c * Rational(e[coord_index]));
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != coords_.size())
        throw DimensionMismatchError("evaluate: point dimension != coordinate count");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= rational_pow(point[i], e[i]);
        acc += term;
    }
    return acc;
}

double Polynomial::evaluate(std::span<const double> point) const {
    if (point.size() != coords_.size())
        throw DimensionMismatchError("evaluate: point dimension != coordinate count");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = to_double(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::extended_to(std::vector<std::string> new_coords) const {
    std::vector<std::size_t> where(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        auto it = std::find(new_coords.begin(), new_coords.end(), coords_[i]);
        if (it == new_coords.end()) throw UnknownCoordinateError(coords_[i]);
        where[i] = static_cast<std::size_t>(it - new_coords.begin());
    }
    Polynomial out(std::move(new_coords));
    for (const auto& [e, c] : terms_) {
        Exponents ne(out.coords_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

std::size_t Polynomial::coord_index(const std::string& name) const {
    auto it = std::find(coords_.begin(), coords_.end(), name);
    if (it == coords_.end()) throw UnknownCoordinateError(name);
    return static_cast<std::size_t>(it - coords_.begin());
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest graded-lex terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exponents& e = it->first;
        Rational c = it->second;
        const bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        if (negative) c = -c;
        first = false;

        std::vector<std::string> factors;
        const bool is_const_term =
            std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
        if (c != 1 || is_const_term) factors.push_back(nilflow::to_string(c));
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::string f = coords_[i];
            if (e[i] > 1) f += "^" + std::to_string(e[i]);
            factors.push_back(std::move(f));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

Polynomial operator*(const Rational& scalar, const Polynomial& p) { return p * scalar; }

void require_same_coords(const Polynomial& a, const Polynomial& b) {
    if (a.coords() != b.coords())
        throw CoordinateMismatchError("polynomials use different coordinate systems");
}

}  // namespace nilflow
