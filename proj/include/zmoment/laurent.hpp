#pragma once

#include <string>
#include <vector>

namespace zmoment {

/// gamma_0 ... gamma_H, the Stieltjes constants, with per-entry error
/// estimates.
struct StieltjesTable {
  std::vector<double> values;
  std::vector<double> est_err;

  int h_max() const { return static_cast<int>(values.size()) - 1; }
  double operator[](int h) const { return values.at(static_cast<std::size_t>(h)); }
};

/// Stieltjes constants via Euler-Maclaurin acceleration of
/// gamma_h = lim [sum_{k<=n} log^h k / k - log^{h+1} n / (h+1)].
/// 0 <= h_max <= 8; throws ErrorCode::accuracy when an entry misses 1e-10.
StieltjesTable stieltjes(int h_max, int max_series_terms = 20);

/// Truncated Laurent expansion in u = s - 1:
///   sum_{k=-p}^{K} c_k u^k,   p = pole_order, K = trunc_order.
/// Coefficients beyond u^K are unknown; every operation propagates the
/// smallest valid order instead of silently extending it.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int pole_order, std::vector<double> coeffs, double est_err = 0.0);

  static LaurentSeries constant(double c, int trunc_order);

  int pole_order() const { return pole_order_; }
  int trunc_order() const { return static_cast<int>(coeffs_.size()) - pole_order_ - 1; }
  double est_err() const { return est_err_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Coefficient of u^power; zero below the pole order. Throws
  /// ErrorCode::series above trunc_order.
  double coeff(int power) const;
  /// Value at u = s - 1 (u != 0 when pole_order > 0).
  double operator()(double u) const;
  template <class C>
  C evaluate(C u) const {
    C acc = 0.0;
    for (int k = trunc_order(); k >= -pole_order_; --k) acc = acc * u + coeffs_[idx(k)];
    for (int k = 0; k < pole_order_; ++k) acc /= u;
    return acc;
  }

  LaurentSeries derivative() const;
  LaurentSeries scaled(double factor) const;
  /// Drops leading coefficients with |c| <= threshold (lowering pole_order).
  LaurentSeries trimmed(double threshold = 0.0) const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

 private:
  std::size_t idx(int power) const { return static_cast<std::size_t>(power + pole_order_); }

  int pole_order_ = 0;
  std::vector<double> coeffs_;
  double est_err_ = 0.0;
};

enum class SeriesOp { add, mul, div, derivative };
LaurentSeries series_op(const LaurentSeries& a, const LaurentSeries& b, SeriesOp op);

/// zeta(s) = 1/(s-1) + sum_h (-1)^h gamma_h / h! (s-1)^h, truncated at u^trunc.
LaurentSeries series_zeta(const StieltjesTable& gammas, int trunc);

/// eta_0 ... eta_{k_max} in zeta'/zeta(s) = -1/(s-1) + sum eta_k (s-1)^k.
std::vector<double> eta_coeffs(const StieltjesTable& gammas, int k_max);

/// Res_{s=1} F(s) x^s / s written as x * sum_i log_coeffs[i] (log x)^i.
struct ResidueTerm {
  double value = 0.0;
  std::vector<double> log_coeffs;
};
ResidueTerm residue_main_term(const LaurentSeries& f, double x);

/// Generating functions whose residues give the main terms of the
/// arithmetic sums behind the discrete moment.
enum class GeneratingFunction {
  log_deriv_times_dzeta_sq,  // (zeta'/zeta) zeta'^2
  dzeta_sq_derivative,       // (zeta'^2)' = 2 zeta' zeta''
  zeta_dzeta_second_deriv,   // (zeta zeta')''
};
LaurentSeries generating_series(GeneratingFunction g, const StieltjesTable& gammas);
std::string to_string(GeneratingFunction g);

/// The five-line residue of (zeta'/zeta) zeta'^2 x^s/s as printed in the
/// source derivation, compared block by block with series arithmetic. Block j
/// (j = 5..1) multiplies x * (j-1)! [u^{j-1}] e^{u log x}/(1+u); the implied
/// Laurent coefficient c_{-j} of each printed block is reported next to the
/// computed one.
struct PrintedResidueCheck {
  std::vector<double> printed_pole_coeffs;   // c_{-5} .. c_{-1}
  std::vector<double> computed_pole_coeffs;  // c_{-5} .. c_{-1}
  std::vector<bool> block_matches;
  std::vector<double> printed_log_coeffs;
  std::vector<double> computed_log_coeffs;
  bool all_match() const;
};
PrintedResidueCheck check_printed_residue(const StieltjesTable& gammas, double tol = 1e-10);

}  // namespace zmoment
