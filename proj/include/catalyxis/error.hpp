#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catalyxis {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  NegativeEntry,
  SumNotOne,
  NotIncomparable,
  IndexOutOfRange,
  ZeroDenominator,
  ResourceLimit,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code drives the C API status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace catalyxis
