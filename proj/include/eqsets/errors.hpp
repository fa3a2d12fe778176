#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqsets {

/// Matrix/vector shapes do not match the operation's contract.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A square system had determinant zero where a nonsingular one was required.
class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input text could not be parsed; position is the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// The input does not describe a valid object (rank-deficient spec, unbounded polytope, ...).
class InvalidSpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter is outside its admissible range.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured budget.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& what, long long required, long long budget)
        : std::runtime_error(what + ": needs " + std::to_string(required) +
                             " items, budget " + std::to_string(budget)),
          required(required),
          budget(budget) {}
    long long required;
    long long budget;
};

/// A proven-impossible state was reached (broken pivot search, failed exact
/// residual check). Always a bug, never a user error.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A perturbed norm violated its declared sandwich constant.
class SandwichViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eqsets
