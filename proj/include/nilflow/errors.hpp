#pragma once

#include <stdexcept>
#include <string>

namespace nilflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two values built over different coordinate systems were combined.
struct CoordinateMismatchError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct UnknownCoordinateError : Error {
    explicit UnknownCoordinateError(std::string coord)
        : Error("unknown coordinate: " + coord), coordinate(std::move(coord)) {}
    std::string coordinate;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// A matrix expected to be nilpotent is not.
struct NotNilpotentError : Error {
    using Error::Error;
};

// Evaluators throw this instead of returning non-finite values; the time of
// failure travels with the exception so integrators can report it.
struct SingularityError : Error {
    SingularityError(const std::string& msg, double t)
        : Error(msg + " (t = " + std::to_string(t) + ")"), time(t) {}
    double time;
};

// The eigenvalue gap vanished; the rotation angle is undefined.
struct DegenerateError : Error {
    using Error::Error;
};

// Raw reduced initial data violates the invariant-manifold constraint.
struct ConstraintError : Error {
    using Error::Error;
};

}  // namespace nilflow
