#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zmoment/laurent.hpp"
#include "zmoment/zeta.hpp"

namespace zmoment {

/// Largest table size accepted by CoeffTable::build.
inline constexpr std::int64_t kMaxTableSize = 10'000'000;

enum class WeightedKind {
  d_logn,              // sum D(n) log n
  one_star_log_log2n,  // sum (1*log)(n) log^2 n
};

enum class CoeffKind {
  lambda_star_d,  // (Lambda * D)(n)
  d,              // D(n)
  one_star_log,   // (1 * log)(n) = sum_{d|n} log d
};

/// Sieve-built Dirichlet coefficients: Lambda(n), D(n) = sum_{d|n} log d
/// log(n/d) and the divisor count. Immutable after build.
class CoeffTable {
 public:
  /// 1 <= n_max <= 1e7; ErrorCode::table otherwise.
  static CoeffTable build(std::int64_t n_max);

  std::int64_t n_max() const { return n_max_; }
  double lambda(std::int64_t n) const { return lambda_.at(static_cast<std::size_t>(n)); }
  double dd(std::int64_t n) const { return dd_.at(static_cast<std::size_t>(n)); }
  double one_star_log(std::int64_t n) const;
  /// (Lambda * D)(n) by direct divisor enumeration.
  double lambda_star_d(std::int64_t n) const;
  double coeff(CoeffKind kind, std::int64_t n) const;

  /// Chebyshev psi(x) = sum_{n <= x} Lambda(n).
  double chebyshev_psi(double x) const;
  /// sum_{mn <= x} Lambda(m) D(n), exact up to rounding.
  double conv_sum_ld(double x) const;
  double weighted_sum(double x, WeightedKind kind) const;

 private:
  std::int64_t check_x(double x, const char* operation) const;

  std::int64_t n_max_ = 0;
  std::vector<double> lambda_;
  std::vector<double> dd_;
  std::vector<double> dd_prefix_;
  std::vector<std::uint32_t> tau_;
};

/// Sign s with sum_{n <= x} b_n ~ s Res_{s=1} F(s) x^s / s for the
/// generating function F of each sum, fixed by comparing both sides at
/// x = 10000.5 rather than trusted from a hand derivation.
struct GeneratingSign {
  GeneratingFunction function;
  int sign = 0;
  double sum_side = 0.0;
  double residue = 0.0;
  double relative_error = 0.0;  // |sum - sign * residue| / |sum|
};
/// Signs for (zeta'/zeta)zeta'^2 <-> Lambda*D, (zeta'^2)' <-> D log n and
/// (zeta zeta')'' <-> (1*log) log^2 n. Computed once per process from the
/// Stieltjes constants gamma_0 .. gamma_6.
const std::vector<GeneratingSign>& generating_signs();

struct GonekCheck {
  double sum_side = 0.0;
  std::complex<double> integral_side;
  double residual = 0.0;  // |integral_side - sum_side|
  double envelope = 0.0;  // T^{a-1/2} (log T)^m
};

/// Compares (1/2pi) int_1^T F(a+it) chi(1-a-it) log^m(t/2pi) dt, with F the
/// Dirichlet series of the chosen coefficients evaluated analytically,
/// against sum_{n <= T/2pi} b_n log^m n.
/// a in (1, 1.5], m in {0, 1, 2}, 2pi < T <= 2000.
GonekCheck gonek_lemma_check(const ZetaEngine& engine, double a, int m, double t_max,
                             CoeffKind kind, unsigned threads = 1);

}  // namespace zmoment
