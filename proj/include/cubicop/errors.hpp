#pragma once

#include <stdexcept>
#include <string>

namespace cubicop {

/// Family parameter outside its admissible range (e.g. Jacobi alpha <= -1).
class ParameterDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Degree, node or basis index out of range.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Mismatched array lengths.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Degenerate input (zero leading coefficient, isolated point, ...).
class DegeneracyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weight support not contained in one component of the curve.
class InvalidChartError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation where phi(x) <= 0, i.e. off the open curve.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cholesky of g(J) failed: the multiplier is not positive on the support.
class PositivityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Hermite-Pade evaluation found no real branch near the guess.
class BranchLossError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Collocation system singular or too ill-conditioned to trust.
class SolveError : public NumericalError {
public:
    SolveError(const std::string& what, double condition)
        : NumericalError(what), condition_(condition) {}
    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

}  // namespace cubicop
