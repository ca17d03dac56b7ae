#pragma once

#include <string>
#include <vector>

#include "zmoment/laurent.hpp"
#include "zmoment/zeros.hpp"
#include "zmoment/zeta.hpp"

namespace zmoment {

/// normalization * T * sum_j coeffs[j] x^j with x = log(T/2pi).
struct MainTermPolynomial {
  std::vector<double> coeffs;
  double normalization = 1.0;
  std::string label;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double polynomial(double x) const;
  double value(double t) const;
  /// coeffs scaled by the normalization.
  std::vector<double> absolute_coeffs() const;
};

struct ReportPart {
  std::string name;
  double value = 0.0;
};

struct MomentReport {
  std::string kind;  // "discrete", "continuous_k0", "continuous_k1", "weighted"
  double t_max = 0.0;
  double computed = 0.0;
  double predicted = 0.0;
  double residual = 0.0;  // computed - predicted
  double envelope = 0.0;
  double residual_over_envelope = 0.0;
  std::vector<ReportPart> parts;
  long zero_count = -1;  // discrete reports only
  int flagged = 0;
};

/// W_g(v) = v^g - g W_{g-1}(v), W_0 = 1; 0 <= g <= 6.
MainTermPolynomial w_poly(int g);
/// Hall's P_{2k+1} = W_{2k+1} + (4k+2) sum_h C(2k,h) (-2)^h gamma_h W_{2k-h};
/// k in {0, 1, 2}.
MainTermPolynomial hall_poly(int k, const StieltjesTable& gammas);
/// P_3 in its expanded form x^3 + 3(2g0-1)x^2 - 6(2g0+4g1-1)x + 6(2g0+4g1+4g2-1).
MainTermPolynomial p3_expanded(const StieltjesTable& gammas);

struct TheoremMainTerm {
  /// (1/2pi) int log(t/2pi) Z'^2 predicted from Hall's k = 1 formula.
  MainTermPolynomial b_block;
  /// 2 Re I_1: twice the residue at s = 1 of the combined generating
  /// functions, written as T * poly(x) / pi.
  MainTermPolynomial c_block;
  /// b + c as absolute coefficients (normalization 1).
  MainTermPolynomial total;
  /// Gonek's leading term T x^4 / (24 pi).
  MainTermPolynomial leading;
  std::vector<int> generating_signs;  // signs used for the three c-block sums

  double value(double t) const { return total.value(t); }
};

/// Assembles the main term of sum_{0<gamma<=T} Z'(gamma)^2. Throws
/// ErrorCode::internal ("assembly inconsistency") if the x^4 or x^3
/// coefficients differ from 1/(24pi) and (2 gamma_0 - 1)/(6pi) by more than
/// 1e-12. Any table with h_max >= 4 is accepted, including synthetic ones.
TheoremMainTerm main_term_theorem(const StieltjesTable& gammas);

double theorem_envelope(double t);
double continuous_envelope(int k, double t);

struct ContinuousOptions {
  unsigned threads = 1;
};

/// int_1^T Z^(k)(t)^2 dt for every T in t_grid (ascending, within
/// [100, 1e4]) from one pass of Gauss-Kronrod panels laid on a fixed grid
/// whose spacing follows the local zero gap.
std::vector<MomentReport> continuous_moment_sweep(const ZetaEngine& engine, int k,
                                                  const std::vector<double>& t_grid,
                                                  const ContinuousOptions& options = {});
MomentReport continuous_moment(const ZetaEngine& engine, int k, double t_max,
                               const ContinuousOptions& options = {});
/// int_a^b Z^(k)(t)^2 dt on the same panel grid; 1 <= a <= b <= 1e4.
double continuous_moment_range(const ZetaEngine& engine, int k, double a, double b,
                               const ContinuousOptions& options = {});

struct WeightedMoment {
  MomentReport report;
  double by_parts = 0.0;  // (1/2pi)[log(T/2pi) I(T) - int_1^T I(t)/t dt]
  double by_parts_relative_residual = 0.0;
};
/// (1/2pi) int_1^T log(t/2pi) Z'(t)^2 dt, 2pi <= T <= 1e4, with the
/// integration-by-parts form evaluated independently by nested quadrature.
WeightedMoment weighted_continuous_moment(const ZetaEngine& engine, double t_max,
                                          const ContinuousOptions& options = {});

/// sum Z'(gamma)^2 over the records with gamma <= t_max, compared with the
/// full main term. t_max defaults to the set's own height.
MomentReport discrete_moment(const ZeroSet& zeros, const TheoremMainTerm& main_term,
                             double t_max = -1.0);

/// Least-squares fit of (M(T) - b-block(T) - c_3 T x^3 / pi) by
/// T (c_0 + c_1 x + c_2 x^2) / pi, with c_3 fixed to its residue value.
struct CBlockFit {
  std::vector<double> fitted;   // c_0 .. c_3 (c_3 copied)
  std::vector<double> residue;  // c_0 .. c_3 from the residue computation
};
CBlockFit fit_c_block(const std::vector<MomentReport>& discrete, const TheoremMainTerm& main_term);

struct Comparison {
  std::vector<MomentReport> reports;
  CBlockFit fit;
  TheoremMainTerm main_term;
  long zero_count = 0;
};
/// Discrete-moment reports for every T in t_grid from one zero scan up to
/// max(t_grid) (or from `zeros` if it reaches that height).
Comparison compare(const ZetaEngine& engine, const ZeroSet& zeros, std::vector<double> t_grid);

}  // namespace zmoment
