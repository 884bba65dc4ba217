#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thetalab {

enum class ErrorCode {
  Syntax,
  UnknownVariable,
  IndexOutOfRange,
  RankMismatch,
  NotInModule,
  NotAFactorization,
  FreeModule,
  NonIsolated,
  InfiniteLength,
  NotProper,
  Parity,
  NotQuasiHomogeneous,
  RingMismatch,
  Unsupported,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// that callers (the job runner in particular) can map it onto a verdict.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally carry the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::size_t position)
      : Error(code, message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace thetalab
