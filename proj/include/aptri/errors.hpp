// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace aptri {

enum class ErrorCode {
  NonPositiveSide,
  TriangleInequality,
  ZeroOperand,
  RhoOutOfRange,
  NotCoprime,
  RatioCondition,
  Parity,
  NonPositive,
  Parse,
  Overflow,
  BadArgument,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a stable error code. The C boundary maps codes onto
/// status values; everything below it throws.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace aptri
