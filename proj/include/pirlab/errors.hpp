#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pirlab {

enum class ErrorCode {
  NonUnit,
  NoSuchElement,
  NoSolution,
  DimensionMismatch,
  ParamError,
  CapExceeded,
  BudgetExceeded,
  MalformedQuery,
  InconsistentAnswer,
  Exhausted,
  SingularM,
  NiceSetError,
  NoNiceS0,
  DecodingPolyInvalid,
  NoMuNu,
  InterpolationSetInvalid,
  Timeout,
  ParamDigestMismatch,
  Transport,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers switch on code().
class PirError : public std::runtime_error {
 public:
  PirError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pirlab
