#pragma once

#include <stdexcept>
#include <string>

namespace ssm {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DecompositionFailure : public Error {
public:
    using Error::Error;
};

class IntegrationFailure : public Error {
public:
    IntegrationFailure(const std::string& what, double last_time)
        : Error(what + " (last valid t = " + std::to_string(last_time) + ")"), last_time_(last_time) {}
    double last_time() const noexcept { return last_time_; }

private:
    double last_time_;
};

class IllConditioned : public Error {
public:
    IllConditioned(const std::string& what, double condition)
        : Error(what + " (condition number " + std::to_string(condition) + ")"), condition_(condition) {}
    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

class FoldSuspected : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double cost, int iterations)
        : Error(what + " (cost " + std::to_string(cost) + " after " + std::to_string(iterations) +
                " iterations)"),
          cost_(cost), iterations_(iterations) {}
    double cost() const noexcept { return cost_; }
    int iterations() const noexcept { return iterations_; }

private:
    double cost_;
    int iterations_;
};

class Divergence : public Error {
public:
    using Error::Error;
};

class ValidityRange : public Error {
public:
    ValidityRange(const std::string& what, double max_rho)
        : Error(what + " (largest admissible rho = " + std::to_string(max_rho) + ")"), max_rho_(max_rho) {}
    double max_rho() const noexcept { return max_rho_; }

private:
    double max_rho_;
};

class SeedFailure : public Error {
public:
    using Error::Error;
};

class CalibrationOutOfRange : public Error {
public:
    using Error::Error;
};

// Malformed or schema-incompatible input files and configs.
class FormatError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// A computed quality metric exceeded its configured threshold.
class ValidationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace ssm
