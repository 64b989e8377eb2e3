#include "ksync/errors.hpp"

namespace ksync {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCharacter: return "INVALID_CHARACTER";
    case ErrorCode::EmptyInput: return "EMPTY_INPUT";
    case ErrorCode::NotThreshold: return "NOT_THRESHOLD";
    case ErrorCode::Disconnected: return "DISCONNECTED";
    case ErrorCode::InvalidParameters: return "INVALID_PARAMETERS";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::IsolatedVertex: return "ISOLATED_VERTEX";
    case ErrorCode::NotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::NotUnitVectors: return "NOT_UNIT_VECTORS";
    case ErrorCode::NonFiniteState: return "NON_FINITE_STATE";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::SingularSystem: return "SINGULAR_SYSTEM";
    case ErrorCode::GraphMismatch: return "GRAPH_MISMATCH";
    case ErrorCode::NotEquilibrium: return "NOT_EQUILIBRIUM";
    case ErrorCode::EmptyGraph: return "EMPTY_GRAPH";
    case ErrorCode::MalformedFile: return "MALFORMED_FILE";
  }
  return "UNKNOWN";
}

}  // namespace ksync
