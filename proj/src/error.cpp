#include "zmoment/error.hpp"

namespace zmoment {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::config: return "config";
    case ErrorCode::domain: return "domain";
    case ErrorCode::pole: return "pole";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::envelope: return "envelope";
    case ErrorCode::accuracy: return "accuracy";
    case ErrorCode::quadrature: return "quadrature";
    case ErrorCode::count_mismatch: return "count_mismatch";
    case ErrorCode::series: return "series";
    case ErrorCode::table: return "table";
    case ErrorCode::io: return "io";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorCode code, std::string module, std::string operation,
             const std::string& reason)
    : std::runtime_error(module + "::" + operation + ": " + reason),
      code_(code),
      module_(std::move(module)),
      operation_(std::move(operation)),
      reason_(reason) {}

}  // namespace zmoment
