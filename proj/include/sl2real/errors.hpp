#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl2real {

enum class ErrorCode {
  Parse,
  NotUnimodular,
  NotARealStructure,
  NotSL2,
  NotElliptic,
  NotParabolic,
  NotHyperbolic,
  NotFactorable,
  ReductionOverflow,
  NotReal,
  CentralInput,
  DepthTooLarge,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Domain error raised by every public operation. Internal invariant
// violations (a failed self-verification) use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sl2real
