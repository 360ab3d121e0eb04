#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linsys {

enum class ErrorCode {
  LinearityViolation,
  DuplicateLine,
  PointOutOfRange,
  EmptyLine,
  IndexOutOfRange,
  InvalidParameter,
  NotImplemented,
  NotATriangle,
  NotUniform,
  GenerationExhausted,
  PreconditionViolated,
  TooLarge,
  SearchBudgetExceeded,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace linsys
