// Error types shared across the library. Every throw site provides a short
// machine-readable code (stable, snake_case) plus a human-readable message;
// the CLI maps ConfigError to exit code 2 and PhysicsError to exit code 3.

#pragma once

#include <stdexcept>
#include <string>

namespace iontrap {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what_arg)
        : std::runtime_error(what_arg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Bad user input: malformed files, out-of-range configuration.
class ConfigError : public Error {
public:
    ConfigError(std::string code, const std::string& what_arg)
        : Error(std::move(code), what_arg) {}
};

// Valid-looking input that the physics or numerics reject.
class PhysicsError : public Error {
public:
    PhysicsError(std::string code, const std::string& what_arg)
        : Error(std::move(code), what_arg) {}
};

class PreconditionError : public PhysicsError {
public:
    explicit PreconditionError(const std::string& what_arg)
        : PhysicsError("precondition_violated", what_arg) {}
};

class DimensionMismatch : public PhysicsError {
public:
    explicit DimensionMismatch(const std::string& what_arg)
        : PhysicsError("dimension_mismatch", what_arg) {}
};

// A formula denominator fell inside the configured guard band.
class DenominatorSingular : public PhysicsError {
public:
    explicit DenominatorSingular(const std::string& what_arg)
        : PhysicsError("denominator_singular", what_arg) {}
};

class ZeroRabi : public PhysicsError {
public:
    explicit ZeroRabi(const std::string& what_arg)
        : PhysicsError("zero_rabi", what_arg) {}
};

// Amplitude would be pushed past the Fock-space truncation level.
class TruncationOverflow : public PhysicsError {
public:
    explicit TruncationOverflow(const std::string& what_arg)
        : PhysicsError("truncation_overflow", what_arg) {}
};

// Adaptive integrator step size underflowed.
class StepFailure : public PhysicsError {
public:
    explicit StepFailure(const std::string& what_arg)
        : PhysicsError("step_failure", what_arg) {}
};

// Scalar solvers.
class NoBracket : public PhysicsError {
public:
    explicit NoBracket(const std::string& what_arg)
        : PhysicsError("no_bracket", what_arg) {}
};

class NoSignChange : public PhysicsError {
public:
    explicit NoSignChange(const std::string& what_arg)
        : PhysicsError("no_sign_change", what_arg) {}
};

class NoMinimum : public PhysicsError {
public:
    explicit NoMinimum(const std::string& what_arg)
        : PhysicsError("no_minimum", what_arg) {}
};

} // namespace iontrap
