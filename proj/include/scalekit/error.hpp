#pragma once

#include <stdexcept>
#include <string>

namespace scalekit {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter combination violates a model invariant (e.g. kappa*varphi != 0).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An iterative scheme (root bracket, quadrature, inversion) did not converge.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what, double best_value = 0.0)
        : Error(what), best_value_(best_value) {}

    double best_value() const noexcept { return best_value_; }

private:
    double best_value_;
};

/// A result leaves the floating point range.
class SaturationError : public Error {
public:
    using Error::Error;
};

/// The requested evaluation route cannot serve these inputs.
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// The quantity is undefined for this process (e.g. ruin when psi'(0+) <= 0).
class NotApplicableError : public Error {
public:
    using Error::Error;
};

/// Root clustering or a partial-fraction solve is ill conditioned.
class ConditioningError : public Error {
public:
    using Error::Error;
};

/// Computed structure contradicts a guaranteed property (e.g. no real root).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace scalekit
