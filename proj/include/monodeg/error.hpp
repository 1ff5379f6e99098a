#pragma once

#include <stdexcept>
#include <string>

namespace monodeg {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotUnimodular,
  RankDeficient,
  WindowTooShort,
  ParseError,
  NotSquare,
  Empty,
  UnresolvedClass,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace monodeg
