#pragma once

#include <stdexcept>
#include <string>

namespace nirrt {

/// Raised when a caller breaks an operation's precondition (dimension
/// mismatch, inverted box, empty tree, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Rejection sampling could not find a free state within its budget.
class InfeasibleSpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejection sampling inside the informed set ran out of budget; the current
/// best cost is inconsistent with the world.
class InfeasibleFocusError : public InfeasibleSpaceError {
 public:
  using InfeasibleSpaceError::InfeasibleSpaceError;
};

/// Point-cloud construction could not obtain enough candidates.
class DegenerateDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A problem generator could not produce a feasible instance.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The guidance provider failed (transport error, bad shape, bad values).
class GuidanceUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed world / record documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nirrt
