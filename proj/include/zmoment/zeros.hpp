#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zmoment/zeta.hpp"

namespace zmoment {

/// One zero gamma of Z(t) with the sign-change bracket it was refined from.
struct ZeroRecord {
  double gamma = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double z_prime = 0.0;
  int refine_iters = 0;
  /// |Z'(gamma)| < 1e-12: a possible multiple zero, reported rather than
  /// silently summed.
  bool flagged = false;
};

struct ZeroSet {
  double t_max = 0.0;
  std::vector<ZeroRecord> zeros;  // strictly increasing gamma in (0, t_max]
  double count_expected = 0.0;    // theta(T)/pi + 1
  double s_of_t = 0.0;            // S(T) = arg zeta(1/2 + iT) / pi
  long count_reconciled = 0;      // round(theta(T)/pi + 1 + S(T))
  int flagged = 0;

  bool reconciled() const { return static_cast<long>(zeros.size()) == count_reconciled; }
};

struct ScanOptions {
  unsigned threads = 1;
  /// Fraction of the first grid step by which the scan grid is shifted;
  /// zero means the grid starts one full step after each chunk start.
  double grid_offset = 0.0;
};

/// Smooth Riemann-von Mangoldt count theta(t)/pi + 1. Requires t >= 10.
double count_expected(double t);

/// S(t) by continuous variation of arg zeta(sigma + it) from sigma = 2 to 1/2.
double s_function(const ZetaEngine& engine, double t);

/// N(t) = theta(t)/pi + 1 + S(t), rounded to the nearest integer.
long count_zeros_exact(const ZetaEngine& engine, double t);

/// Locates every sign change of Z on [1, t_max] (no zeros lie below 14).
/// The interval is cut into fixed chunks scanned independently, so the
/// result does not depend on options.threads. Throws
/// ErrorCode::count_mismatch when the total differs from
/// round(theta(T)/pi + 1) by more than 2.
ZeroSet scan_zeros(const ZetaEngine& engine, double t_max, const ScanOptions& options = {});

/// CSV with columns gamma,z_prime,bracket_lo,bracket_hi at 17 significant
/// digits. With metadata, '#'-prefixed lines carry the count fields.
std::string zeros_to_csv(const ZeroSet& set, bool with_metadata = false);
/// Parses zeros_to_csv output written with metadata.
ZeroSet zeros_from_csv(std::string_view text);

}  // namespace zmoment
