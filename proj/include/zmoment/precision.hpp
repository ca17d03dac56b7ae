#pragma once

#include <cstdint>

namespace zmoment {

/// Accuracy targets shared by every evaluator. Immutable once handed to an
/// engine; validate() enforces the admissible ranges.
struct PrecisionConfig {
  double target_abs_tol = 1e-10;
  double target_rel_tol = 1e-10;
  int max_series_terms = 20;

  void validate() const;
  /// Stable 64-bit digest, used to key on-disk caches.
  std::uint64_t hash() const noexcept;
};

}  // namespace zmoment
