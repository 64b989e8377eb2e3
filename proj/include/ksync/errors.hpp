#pragma once

#include <stdexcept>
#include <string>

namespace ksync {

enum class ErrorCode {
  InvalidCharacter,
  EmptyInput,
  NotThreshold,
  Disconnected,
  InvalidParameters,
  DimensionMismatch,
  IsolatedVertex,
  NotSymmetric,
  NotUnitVectors,
  NonFiniteState,
  NoConvergence,
  SingularSystem,
  GraphMismatch,
  NotEquilibrium,
  EmptyGraph,
  MalformedFile,
};

/// Machine-parsable name, e.g. ErrorCode::NotThreshold -> "NOT_THRESHOLD".
const char* error_code_name(ErrorCode code);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ksync
