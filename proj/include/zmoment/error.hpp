#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zmoment {

enum class ErrorCode {
  invalid_argument = 1,
  config,
  domain,
  pole,
  overflow,
  envelope,
  accuracy,
  quadrature,
  count_mismatch,
  series,
  table,
  io,
  internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Error raised by every module. Carries the module and operation that failed
/// so callers (and the C API) can report a structured diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, std::string operation,
        const std::string& reason);

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }
  const std::string& operation() const noexcept { return operation_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  ErrorCode code_;
  std::string module_;
  std::string operation_;
  std::string reason_;
};

}  // namespace zmoment
