#include "nilflow/vector_field.hpp"

#include <sstream>

#include "nilflow/errors.hpp"

namespace nilflow {

VectorField::VectorField(std::vector<std::string> coords, std::vector<Polynomial> components)
    : coords_(std::move(coords)), components_(std::move(components)) {
    if (components_.size() != coords_.size())
        throw DimensionMismatchError("vector field needs one component per coordinate");
    for (const auto& c : components_)
        if (c.coords() != coords_)
            throw CoordinateMismatchError("component uses a foreign coordinate system");
}

VectorField VectorField::zero(std::vector<std::string> coords) {
    std::vector<Polynomial> comps(coords.size(), Polynomial::zero(coords));
    return VectorField(std::move(coords), std::move(comps));
}

VectorField VectorField::dilation(std::vector<std::string> coords) {
    std::vector<Polynomial> comps;
    comps.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        comps.push_back(Polynomial::variable(coords, i));
    return VectorField(std::move(coords), std::move(comps));
}

bool VectorField::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

bool VectorField::operator==(const VectorField& rhs) const {
    return coords_ == rhs.coords_ && components_ == rhs.components_;
}

Polynomial VectorField::apply(const Polynomial& f) const {
    require_same_coords(*this, f);
    Polynomial out = Polynomial::zero(coords_);
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].is_zero()) continue;
        out = out + components_[i] * f.partial(i);
    }
    return out;
}

std::string VectorField::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << components_[i].to_string() << ")*d/d" << coords_[i];
    }
    if (first) out << "0";
    return out.str();
}

Polynomial lie_derivative(const VectorField& v, const Polynomial& f) { return v.apply(f); }

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
    require_same_coords(v, w);
    std::vector<Polynomial> comps;
    comps.reserve(v.coords().size());
    for (std::size_t j = 0; j < v.coords().size(); ++j)
        comps.push_back(v.apply(w.component(j)) - w.apply(v.component(j)));
    return VectorField(v.coords(), std::move(comps));
}

void require_same_coords(const VectorField& v, const Polynomial& f) {
    if (v.coords() != f.coords())
        throw CoordinateMismatchError("vector field and polynomial coordinate systems differ");
}

void require_same_coords(const VectorField& v, const VectorField& w) {
    if (v.coords() != w.coords())
        throw CoordinateMismatchError("vector fields use different coordinate systems");
}

}  // namespace nilflow
