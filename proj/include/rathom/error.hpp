#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rathom {

enum class ErrorCode {
  parse,
  invalid_argument,
  capacity,
  range,
  factorization,
  io,
};

/// Stable identifier printed by the CLI, e.g. "E_RANGE".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rathom
