#include "matmeans/error.hpp"

namespace matmeans {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonHermitian: return "NON_HERMITIAN";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::NotPositiveDefinite: return "NOT_POSITIVE_DEFINITE";
    case ErrorCode::DomainError: return "DOMAIN_ERROR";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::TOutOfRange: return "T_OUT_OF_RANGE";
    case ErrorCode::SOutOfRange: return "S_OUT_OF_RANGE";
    case ErrorCode::ROutOfRange: return "R_OUT_OF_RANGE";
    case ErrorCode::POutOfRange: return "P_OUT_OF_RANGE";
    case ErrorCode::KOutOfRange: return "K_OUT_OF_RANGE";
    case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::NonpositiveForLog: return "NONPOSITIVE_FOR_LOG";
    case ErrorCode::ZOutOfStrip: return "Z_OUT_OF_STRIP";
    case ErrorCode::PremiseViolated: return "PREMISE_VIOLATED";
    case ErrorCode::ConstructionFailed: return "CONSTRUCTION_FAILED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ConfigInvalid: return "CONFIG_INVALID";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace matmeans
