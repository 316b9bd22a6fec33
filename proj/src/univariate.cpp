#include "nilflow/univariate.hpp"

#include <sstream>

#include "nilflow/errors.hpp"

namespace nilflow {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UnivariatePoly UnivariatePoly::constant(const Rational& c) {
    return UnivariatePoly(std::vector<Rational>{c});
}

UnivariatePoly UnivariatePoly::x() {
    return UnivariatePoly(std::vector<Rational>{Rational(0), Rational(1)});
}

void UnivariatePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePoly::leading() const {
    if (coeffs_.empty()) return Rational(0);
    return coeffs_.back();
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& rhs) const {
    if (coeffs_.empty() || rhs.coeffs_.empty()) return {};
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator*(const Rational& scalar) const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c *= scalar;
    return UnivariatePoly(std::move(out));
}

bool UnivariatePoly::operator==(const UnivariatePoly& rhs) const {
    return coeffs_ == rhs.coeffs_;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::monic() const {
    if (coeffs_.empty()) return {};
    return *this * (Rational(1) / leading());
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(
    const UnivariatePoly& rhs) const {
    if (rhs.is_zero()) throw Error("polynomial division by zero");
    UnivariatePoly rem = *this;
    std::vector<Rational> quot(
        degree() >= rhs.degree() ? static_cast<std::size_t>(degree() - rhs.degree()) + 1 : 0,
        Rational(0));
    while (!rem.is_zero() && rem.degree() >= rhs.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - rhs.degree());
        const Rational factor = rem.leading() / rhs.leading();
        quot[shift] = factor;
        std::vector<Rational> sub(shift + rhs.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
            sub[shift + i] = rhs.coeffs_[i] * factor;
        rem = rem - UnivariatePoly(std::move(sub));
    }
    return {UnivariatePoly(std::move(quot)), rem};
}

Rational UnivariatePoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

RationalMatrix UnivariatePoly::operator()(const RationalMatrix& m) const {
    if (!m.is_square()) throw DimensionMismatchError("polynomial of non-square matrix");
    RationalMatrix acc(m.rows(), m.cols());
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * m;
        if (coeffs_[i] != 0)
            acc = acc + RationalMatrix::identity(m.rows()) * coeffs_[i];
    }
    return acc;
}

std::string UnivariatePoly::to_string(const std::string& symbol) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (c < 0) c = -c;
        if (c != 1 || i == 0) out << nilflow::to_string(c);
        if (i >= 1) {
            if (c != 1) out << "*";
            out << symbol;
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = std::move(b);
        b = r.monic();  // keep coefficients small
    }
    return a.monic();
}

BezoutPair poly_extended_gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly r0 = a, r1 = b;
    UnivariatePoly u0 = UnivariatePoly::constant(1), u1;
    UnivariatePoly v0, v1 = UnivariatePoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UnivariatePoly u2 = u0 - q * u1;
        UnivariatePoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {u0, v0, r0};
    const Rational lead = r0.leading();
    const Rational inv = Rational(1) / lead;
    return {u0 * inv, v0 * inv, r0 * inv};
}

UnivariatePoly squarefree_part(const UnivariatePoly& p) {
    if (p.is_zero()) return p;
    const UnivariatePoly g = poly_gcd(p, p.derivative());
    auto [q, r] = p.divmod(g);
    if (!r.is_zero()) throw Error("squarefree_part: non-exact division");
    return q.monic();
}

}  // namespace nilflow
