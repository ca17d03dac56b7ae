#pragma once

#include <array>

#include "zmoment/laurent.hpp"
#include "zmoment/precision.hpp"
#include "zmoment/special_fn.hpp"

namespace zmoment {

struct ZetaEvaluation {
  Complex value;
  int derivative_order = 0;
  double est_abs_err = 0.0;
};

struct Z1Value {
  Complex s;
  Complex value;
};

/// Z(t), Z'(t) together with the zeta values they were rotated from.
struct HardyValues {
  double z = 0.0;
  double z_prime = 0.0;
  Complex zeta;
  Complex zeta_prime;
  double theta = 0.0;
  double theta_prime = 0.0;
};

/// Largest |Im s| the engine accepts.
inline constexpr double kMaxImaginaryPart = 1e5;

/// Evaluates zeta and its first two derivatives by Euler-Maclaurin summation
/// with N = max(20, 2|Im s|) direct terms; derivatives come from term-wise
/// differentiation. Inside |s - 1| < 0.1 the Laurent expansion at s = 1 is
/// used instead. Immutable after construction and safe to share across
/// threads.
class ZetaEngine {
 public:
  explicit ZetaEngine(PrecisionConfig config = {});

  const PrecisionConfig& config() const { return config_; }
  const StieltjesTable& stieltjes_table() const { return gammas_; }

  ZetaEvaluation zeta(Complex s, int order = 0) const;
  /// zeta, zeta', zeta'' at s (entries above max_order are left zero).
  std::array<Complex, 3> zeta_derivatives(Complex s, int max_order, double* est_abs_err = nullptr) const;

  double hardy_z(double t) const;
  double hardy_z_prime(double t) const;
  HardyValues hardy(double t) const;

  /// Z_1(s) = zeta'(s) - omega(s) zeta(s) / 2.
  Z1Value z1(Complex s) const;

  /// Number of direct terms used at height t.
  static int euler_maclaurin_terms(double t);

 private:
  std::array<Complex, 3> euler_maclaurin(Complex s, int max_order, double* est) const;
  std::array<Complex, 3> near_pole(Complex s, int max_order, double* est) const;

  PrecisionConfig config_;
  StieltjesTable gammas_;
  std::array<LaurentSeries, 3> near_one_;
};

}  // namespace zmoment
