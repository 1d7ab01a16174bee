#pragma once

#include <stdexcept>
#include <string>

namespace twinasset {

/// Raised when an input violates a documented precondition (non-positive
/// price, volatility or horizon, correlation outside [-1, 1], ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The drift of the reference asset is zero, so the coefficient of
/// variation, and with it alpha, does not exist.
class UndefinedAlpha : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// The twin pricing formula needs alpha > 0 (it raises the transformed
/// strike to the power sigma_i / (alpha * sigma_j)).
class UnsupportedSimilarity : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A numerical routine failed to reach its tolerance.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

}  // namespace twinasset

namespace twinasset {

/// Output could not be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace twinasset
