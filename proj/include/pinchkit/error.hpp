#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pinchkit {

enum class ErrorCode {
  kNotInvertible,
  kNotCoprime,
  kBothEven,
  kNonPositive,
  kOverflow,
  kUnknotInput,
  kBoundaryHit,
  kOddEuler,
  kInvalidBox,
  kCurvesTooClose,
  kTooLarge,
  kInvalidConfig,
  kIo,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this one exception type; callers
// that need to branch (the CLI maps codes onto exit statuses) inspect code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pinchkit
