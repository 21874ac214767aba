#pragma once

#include <stdexcept>
#include <string>

namespace matmeans {

enum class ErrorCode {
  NonHermitian,
  NoConvergence,
  NotPositiveDefinite,
  DomainError,
  DimensionMismatch,
  TOutOfRange,
  SOutOfRange,
  ROutOfRange,
  POutOfRange,
  KOutOfRange,
  LengthMismatch,
  NonpositiveForLog,
  ZOutOfStrip,
  PremiseViolated,
  ConstructionFailed,
  ParseError,
  ConfigInvalid,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-checkable error code next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace matmeans
