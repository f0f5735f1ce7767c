#pragma once

#include <stdexcept>
#include <string>

namespace qwalks {

/// Base class for every error raised on invalid mathematical input
/// (bad step-set strings, out-of-scope models, violated preconditions).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A requested computation exceeds a configured size guard.
class GuardExceeded : public DomainError {
public:
  using DomainError::DomainError;
};

/// The model is not one of the registered quarter-plane models.
class UnscopedModel : public DomainError {
public:
  using DomainError::DomainError;
};

/// A method does not apply to the given model (e.g. vanishing orbit sum).
class Inapplicable : public DomainError {
public:
  using DomainError::DomainError;
};

/// Raised when an internal consistency check fails. Always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace qwalks
