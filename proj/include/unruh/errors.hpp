#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace unruh {

/// Base class for all toolkit errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
class domain_error : public error {
public:
    using error::error;
};

/// A quadrature could not reach the requested tolerance. Carries the best
/// available value and the error actually achieved.
class tolerance_error : public error {
public:
    tolerance_error(const std::string& what, double value, double achieved, double requested)
        : error(what), value(value), achieved(achieved), requested(requested) {}
    double value;      ///< best estimate despite nonconvergence
    double achieved;   ///< achieved relative error estimate
    double requested;  ///< requested relative tolerance
};

/// A limit extrapolation (Richardson ladder) failed to converge. Carries the
/// sampled sequence for diagnostics.
class extrapolation_error : public error {
public:
    extrapolation_error(const std::string& what, std::vector<double> sequence)
        : error(what), sequence(std::move(sequence)) {}
    std::vector<double> sequence;
};

/// A requested operation would need amplitudes beyond the Fock-space cutoff.
class truncation_error : public error {
public:
    using error::error;
};

/// An integral diverges over the requested bounds.
class integrability_error : public error {
public:
    using error::error;
};

}  // namespace unruh
