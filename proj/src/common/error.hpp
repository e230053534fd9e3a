#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace covdim {

enum class ErrorCode {
  CapExceeded = 1,
  NotAbelian,
  NotAHomomorphism,
  NotNormal,
  InvalidArgument,
  NotMultihomogeneous,
  ZeroComponent,
  BetaNotSeparating,
  BlockMismatch,
  NotFound,
  MuNotInColumnSpace,
  NotInvariant,
  ChartDegenerate,
  NoFreePoint,
  PreconditionViolated,
  NotFaithfulFactor,
  InconsistentDerivation,
  OracleDisagreement,
  SyntaxError,
  SemanticError,
  IoError,
  FormatError,
};

/// Stable machine-readable name, used in JSON error objects.
const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t position = npos)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  /// Byte offset into the parsed text for syntax errors, npos otherwise.
  std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ErrorCode code_;
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace covdim
