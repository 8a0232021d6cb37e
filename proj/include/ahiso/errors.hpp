#pragma once

#include <stdexcept>
#include <string>

namespace ahiso {

/// Base class for all library errors. The message always names the failing
/// operation, e.g. "integrate: budget exhausted".
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iteration budget (max_evals) was hit before convergence.
class BudgetExhausted : public Error {
public:
    using Error::Error;
};

/// A NaN or infinity was produced where a finite value is required.
class NonFiniteValue : public Error {
public:
    using Error::Error;
};

/// The tail of an improper integral is not shrinking.
class DivergenceDetected : public Error {
public:
    using Error::Error;
};

/// The ODE step size underflowed (stiffness or a singularity).
class StepUnderflow : public Error {
public:
    using Error::Error;
};

/// Root bracket endpoints do not straddle a sign change.
class NoSignChange : public Error {
public:
    using Error::Error;
};

/// Too few or unusable data points for the requested fit/audit.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// An argument is outside the operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A metric or counterexample construction failed a validity check
/// (horizon condition, C1 matching, infeasible parameters).
class ConstructionError : public Error {
public:
    using Error::Error;
};

} // namespace ahiso
