#pragma once

#include <stdexcept>
#include <string>

namespace cblock {

// Caller supplied something outside the domain of an operation
// (bad rank, non-dominant weight, weight outside the alcove, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A floating-point evaluation landed too far from an integer.
class RoundingError : public std::runtime_error {
public:
    RoundingError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// The request is well formed but beyond what we materialize (e.g. the E8 Weyl group).
class Unsupported : public std::runtime_error {
public:
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cblock
