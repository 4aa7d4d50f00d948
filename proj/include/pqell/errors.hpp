#pragma once

#include <stdexcept>
#include <string>

namespace pqell {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An iterative method (series, quadrature, root finder) ran out of budget
// before meeting its tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The quantity itself is infinite (e.g. K_{p,q}(1) for p <= 2), either by
// policy or because the quadrature divergence detector fired.
class DivergenceError : public NonConvergenceError {
public:
    using NonConvergenceError::NonConvergenceError;
};

// tan_{p,q} evaluated at a pole.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

namespace detail {

[[noreturn]] inline void domain_fail(const char* function, const std::string& what)
{
    throw DomainError(std::string(function) + ": " + what);
}

} // namespace detail

} // namespace pqell
