#include "zmoment/precision.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "zmoment/error.hpp"

namespace zmoment {

void PrecisionConfig::validate() const {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::config, "special_fn", "PrecisionConfig", why);
  };
  if (!(target_abs_tol > 0.0 && target_abs_tol <= 1e-6))
    fail("target_abs_tol must lie in (0, 1e-6]");
  if (!(target_rel_tol > 0.0 && target_rel_tol <= 1e-6))
    fail("target_rel_tol must lie in (0, 1e-6]");
  if (max_series_terms < 8) fail("max_series_terms must be >= 8");
}

std::uint64_t PrecisionConfig::hash() const noexcept {
  // FNV-1a over the raw field bytes.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* p, std::size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ull;
    }
  };
  mix(&target_abs_tol, sizeof target_abs_tol);
  mix(&target_rel_tol, sizeof target_rel_tol);
  mix(&max_series_terms, sizeof max_series_terms);
  return h;
}

}  // namespace zmoment
