#pragma once

#include <stdexcept>
#include <string>

namespace pharmonic {

/// Input violates an operation precondition or a domain invariant.
/// Maps to CLI exit code 1.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative solve exhausted its budget before reaching tolerance.
/// Carries the best residual seen so the caller can inspect partial progress.
/// Maps to CLI exit code 2.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual_(best_residual) {}

    double best_residual() const { return best_residual_; }

private:
    double best_residual_ = 0.0;
};

/// An internal consistency check failed (e.g. a monotone sequence increased
/// beyond slack). Signals a bug or a tolerance that is too loose.
/// Maps to CLI exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pharmonic
