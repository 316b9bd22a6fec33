#pragma once

#include <string>
#include <vector>

#include "nilflow/polynomial.hpp"

namespace nilflow {

// A derivation of the polynomial algebra: one polynomial component per
// coordinate. Applying it to an observable is the Lie derivative.
class VectorField {
public:
    VectorField(std::vector<std::string> coords, std::vector<Polynomial> components);

    static VectorField zero(std::vector<std::string> coords);
    // The dilation field x_i d/dx_i; linear fields are exactly the fields
    // commuting with it.
    static VectorField dilation(std::vector<std::string> coords);

    const std::vector<std::string>& coords() const { return coords_; }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(std::size_t i) const { return components_.at(i); }

    bool is_zero() const;
    bool operator==(const VectorField& rhs) const;

    // Lie derivative: sum_i component_i * df/dx_i, in canonical form.
    Polynomial apply(const Polynomial& f) const;

    std::string to_string() const;

private:
    std::vector<std::string> coords_;
    std::vector<Polynomial> components_;
};

Polynomial lie_derivative(const VectorField& v, const Polynomial& f);

// Commutator of derivations: [V, W](f) = V(W(f)) - W(V(f)).
VectorField lie_bracket(const VectorField& v, const VectorField& w);

void require_same_coords(const VectorField& v, const Polynomial& f);
void require_same_coords(const VectorField& v, const VectorField& w);

}  // namespace nilflow
