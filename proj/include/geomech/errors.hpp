#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geomech {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// so3se3

class NotSkew : public Error {
public:
    NotSkew() : Error("matrix is not skew-symmetric") {}
};

class NearPiRotation : public Error {
public:
    NearPiRotation() : Error("rotation angle too close to pi for the logarithm") {}
};

class SingularCayley : public Error {
public:
    SingularCayley() : Error("I + R is singular; no inverse Cayley image") {}
};

class InvalidRotation : public Error {
public:
    explicit InvalidRotation(const std::string& what) : Error("invalid rotation: " + what) {}
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("3x3 system is singular") {}
};

// geometry

class DimMismatch : public Error {
public:
    DimMismatch(std::size_t a, std::size_t b)
        : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class OutOfChart : public Error {
public:
    explicit OutOfChart(const std::string& why) : Error("outside the local chart of tau: " + why) {}
};

// odecore

class NoConvergence : public Error {
public:
    NoConvergence(int iterations, double residual)
        : Error("Newton did not converge after " + std::to_string(iterations) +
                " iterations (residual " + std::to_string(residual) + ")"),
          iterations_(iterations),
          residual_(residual) {}

    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

class SingularJacobian : public Error {
public:
    SingularJacobian() : Error("Newton Jacobian is singular") {}
};

// mechanics

class SingularOrigin : public Error {
public:
    SingularOrigin() : Error("Kepler field evaluated at the origin") {}
};

class DegenerateProjection : public Error {
public:
    DegenerateProjection() : Error("cannot project a point on the cylinder axis") {}
};

class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& what) : Error("invalid parameter: " + what) {}
};

// bench

/// Bad configuration or usage; the CLI maps these to exit code 1.
class ConfigError : public Error {
public:
    using Error::Error;
};

class ParseError : public ConfigError {
public:
    ParseError(int line, const std::string& what)
        : ConfigError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class UnknownKey : public ConfigError {
public:
    explicit UnknownKey(const std::string& key) : ConfigError("unknown key '" + key + "'"), key_(key) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

class MissingKey : public ConfigError {
public:
    explicit MissingKey(const std::string& key) : ConfigError("missing required key '" + key + "'") {}
};

class IncompatiblePair : public ConfigError {
public:
    IncompatiblePair(const std::string& scenario, const std::string& integrator)
        : ConfigError("integrator '" + integrator + "' cannot run scenario '" + scenario + "'") {}
};

class IntegratorFailure : public Error {
public:
    IntegratorFailure(long step, const std::string& cause)
        : Error("integrator failed at step " + std::to_string(step) + ": " + cause), step_(step), cause_(cause) {}
    long step() const noexcept { return step_; }
    const std::string& cause() const noexcept { return cause_; }

private:
    long step_;
    std::string cause_;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error("i/o error: " + what) {}
};

class UnknownColumn : public Error {
public:
    explicit UnknownColumn(const std::string& col) : Error("unknown column '" + col + "'") {}
};

}  // namespace geomech
