#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tamari {

// Domain errors surface as CLI exit code 1, parse errors as 2, capacity as 3.

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UndefinedSubtreeError : DomainError {
  using DomainError::DomainError;
};

struct IndexOutOfRangeError : DomainError {
  using DomainError::DomainError;
};

struct UndefinedActionError : DomainError {
  explicit UndefinedActionError(const std::string& what, std::size_t letter = 0)
      : DomainError(what), letter_index(letter) {}
  // index of the first letter whose action fails (0-based within the word)
  std::size_t letter_index;
};

struct SizeMismatchError : DomainError {
  using DomainError::DomainError;
};

struct NotComparableError : DomainError {
  using DomainError::DomainError;
};

struct InconsistentCoveringError : DomainError {
  using DomainError::DomainError;
};

struct InternalInvariantViolation : DomainError {
  using DomainError::DomainError;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedPolishError : ParseError {
  using ParseError::ParseError;
};

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tamari
