#include "zmoment/moments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "zmoment/arith.hpp"
#include "zmoment/error.hpp"
#include "zmoment/parallel.hpp"
#include "zmoment/quadrature.hpp"

namespace zmoment {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGridTop = 1e4;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<double> poly_add(std::vector<double> a, const std::vector<double>& b, double scale = 1.0) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  return a;
}

double log_over_2pi(double t) { return std::log(t / (2.0 * kPi)); }

// Panel edges from t = 1 to past 1e4, each panel one local zero gap wide
// (at most 1). Shared by every continuous integral so results are additive.
const std::vector<double>& panel_edges() {
  static std::once_flag once;
  static std::vector<double> edges;
  std::call_once(once, [] {
    double t = 1.0;
    edges.push_back(t);
    while (t < kGridTop) {
      const double tp = riemann_siegel_theta_prime(t);
      const double w = tp > 0.0 ? std::min(1.0, kPi / tp) : 0.5;
      t += w;
      edges.push_back(t);
    }
  });
  return edges;
}

struct Piece {
  double lo;
  double hi;
};

std::vector<Piece> make_pieces(double a, double b, const std::vector<double>& cuts) {
  std::vector<double> pts{a};
  const auto& edges = panel_edges();
  auto it = std::upper_bound(edges.begin(), edges.end(), a);
  auto ct = std::upper_bound(cuts.begin(), cuts.end(), a);
  for (;;) {
    double next = b;
    if (it != edges.end() && *it < next) next = *it;
    if (ct != cuts.end() && *ct < next) next = *ct;
    if (next - pts.back() > 1e-12) pts.push_back(next);
    if (next >= b) break;
    if (it != edges.end() && *it <= next) ++it;
    if (ct != cuts.end() && *ct <= next) ++ct;
  }
  std::vector<Piece> out;
  for (std::size_t i = 1; i < pts.size(); ++i) out.push_back({pts[i - 1], pts[i]});
  return out;
}

// Per piece: int Z^2, int Z'^2, int log(t/2pi) Z'^2, int Z'^2 log(hi/t).
using Vec4 = quad::Vec<4>;

std::vector<Vec4> integrate_pieces(const ZetaEngine& engine, const std::vector<Piece>& pieces,
                                   unsigned threads) {
  std::vector<Vec4> out(pieces.size());
  parallel_for(pieces.size(), threads, [&](std::size_t i) {
    const auto [lo, hi] = pieces[i];
    auto f = [&](double t) {
      const HardyValues h = engine.hardy(t);
      const double zp2 = h.z_prime * h.z_prime;
      Vec4 v;
      v[0] = h.z * h.z;
      v[1] = zp2;
      v[2] = log_over_2pi(t) * zp2;
      v[3] = std::log(hi / t) * zp2;
      return v;
    };
    const double scale = 1.0 + std::pow(std::log(hi), 3);
    out[i] = quad::adaptive<Vec4>(f, lo, hi, 1e-9 * (hi - lo) * scale, 8).value;
  });
  return out;
}

Vec4 sum_range(const std::vector<Vec4>& parts, std::size_t end) {
  return pairwise_sum(std::span<const Vec4>(parts.data(), end));
}

void fill_residual(MomentReport& r) {
  r.residual = r.computed - r.predicted;
  r.residual_over_envelope = r.residual / r.envelope;
}

void check_continuous_k(int k, const char* op) {
  if (k != 0 && k != 1) {
    throw Error(ErrorCode::invalid_argument, "moments_asymptotics", op, "k must be 0 or 1");
  }
}

}  // namespace

double MainTermPolynomial::polynomial(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

double MainTermPolynomial::value(double t) const {
  return normalization * t * polynomial(log_over_2pi(t));
}

std::vector<double> MainTermPolynomial::absolute_coeffs() const {
  std::vector<double> out = coeffs;
  for (double& c : out) c *= normalization;
  return out;
}

MainTermPolynomial w_poly(int g) {
  if (g < 0 || g > 6) {
    throw Error(ErrorCode::invalid_argument, "moments_asymptotics", "w_poly", "g must lie in [0, 6]");
  }
  std::vector<double> w{1.0};
  for (int j = 1; j <= g; ++j) {
    std::vector<double> next(static_cast<std::size_t>(j + 1), 0.0);
    next[static_cast<std::size_t>(j)] = 1.0;
    next = poly_add(next, w, -static_cast<double>(j));
    w = std::move(next);
  }
  return {w, 1.0, "W_" + std::to_string(g)};
}

MainTermPolynomial hall_poly(int k, const StieltjesTable& gammas) {
  if (k < 0 || k > 2) {
    throw Error(ErrorCode::invalid_argument, "moments_asymptotics", "hall_poly", "k must lie in [0, 2]");
  }
  if (gammas.h_max() < 2 * k) {
    throw Error(ErrorCode::series, "moments_asymptotics", "hall_poly",
                "insufficient constants: need gamma_0 .. gamma_" + std::to_string(2 * k));
  }
  std::vector<double> p = w_poly(2 * k + 1).coeffs;
  for (int h = 0; h <= 2 * k; ++h) {
    const double c = (4.0 * k + 2.0) * binomial(2 * k, h) * std::pow(-2.0, h) * gammas[h];
    p = poly_add(p, w_poly(2 * k - h).coeffs, c);
  }
  return {p, 1.0, "P_" + std::to_string(2 * k + 1)};
}

MainTermPolynomial p3_expanded(const StieltjesTable& gammas) {
  if (gammas.h_max() < 2) {
    throw Error(ErrorCode::series, "moments_asymptotics", "p3_expanded", "need gamma_0 .. gamma_2");
  }
  const double g0 = gammas[0], g1 = gammas[1], g2 = gammas[2];
  return {{6.0 * (2.0 * g0 + 4.0 * g1 + 4.0 * g2 - 1.0), -6.0 * (2.0 * g0 + 4.0 * g1 - 1.0),
           3.0 * (2.0 * g0 - 1.0), 1.0},
          1.0,
          "P_3"};
}

TheoremMainTerm main_term_theorem(const StieltjesTable& gammas) {
  const char* op = "main_term_theorem";
  if (gammas.h_max() < 4) {
    throw Error(ErrorCode::series, "moments_asymptotics", op, "needs gamma_0 .. gamma_4");
  }
  TheoremMainTerm out;

  // b-block: (T/24pi) [x P_3(x) - sum_k p_k W_k(x)], from
  // int_1^T log^k(t/2pi) dt = T W_k(x) + const.
  const auto p3 = hall_poly(1, gammas).coeffs;
  std::vector<double> b(p3.size() + 1, 0.0);
  for (std::size_t i = 0; i < p3.size(); ++i) b[i + 1] += p3[i];
  for (std::size_t kk = 0; kk < p3.size(); ++kk) b = poly_add(b, w_poly(static_cast<int>(kk)).coeffs, -p3[kk]);
  out.b_block = {b, 1.0 / (24.0 * kPi), "b_block"};

  // c-block: 2 Re I_1 = 2 Res_{s=1} G(s) x^s/s at x = T/2pi, where
  // sum [Lambda*D - D log n + (1*log) log^2 n / 4] ~ Res G x^s/s.
  const auto& signs = generating_signs();
  const int s1 = signs[0].sign, s2 = signs[1].sign, s3 = signs[2].sign;
  out.generating_signs = {s1, s2, s3};
  const LaurentSeries f1 = generating_series(GeneratingFunction::log_deriv_times_dzeta_sq, gammas);
  const LaurentSeries f2 = generating_series(GeneratingFunction::dzeta_sq_derivative, gammas);
  const LaurentSeries f3 = generating_series(GeneratingFunction::zeta_dzeta_second_deriv, gammas);
  const LaurentSeries g = f1.scaled(s1) - f2.scaled(s2) + f3.scaled(0.25 * s3);
  std::vector<double> q = residue_main_term(g, 2.0).log_coeffs;
  // 2 * (T/2pi) * sum q_i L^i = (T/pi) sum q_i L^i
  out.c_block = {q, 1.0 / kPi, "c_block"};

  out.total = {poly_add(out.b_block.absolute_coeffs(), out.c_block.absolute_coeffs()), 1.0, "total"};
  out.leading = {{0.0, 0.0, 0.0, 0.0, 1.0}, 1.0 / (24.0 * kPi), "gonek_leading"};

  const auto& tc = out.total.coeffs;
  const double want4 = 1.0 / (24.0 * kPi);
  const double want3 = (2.0 * gammas[0] - 1.0) / (6.0 * kPi);
  const double got4 = tc.size() > 4 ? tc[4] : 0.0;
  const double got3 = tc.size() > 3 ? tc[3] : 0.0;
  if (tc.size() > 5 || std::abs(got4 - want4) > 1e-12 || std::abs(got3 - want3) > 1e-12) {
    throw Error(ErrorCode::internal, "moments_asymptotics", op,
                "assembly inconsistency: log^4 coefficient " + std::to_string(got4) +
                    ", log^3 coefficient " + std::to_string(got3));
  }
  return out;
}

double theorem_envelope(double t) { return std::pow(t, 0.75) * std::pow(std::log(t), 3.5); }

double continuous_envelope(int k, double t) {
  return std::pow(t, 0.75) * std::pow(std::log(t), 2.0 * k + 0.5);
}

std::vector<MomentReport> continuous_moment_sweep(const ZetaEngine& engine, int k,
                                                  const std::vector<double>& t_grid,
                                                  const ContinuousOptions& options) {
  const char* op = "continuous_moment";
  check_continuous_k(k, op);
  if (t_grid.empty() || !std::is_sorted(t_grid.begin(), t_grid.end()) ||
      std::adjacent_find(t_grid.begin(), t_grid.end()) != t_grid.end()) {
    throw Error(ErrorCode::invalid_argument, "moments_asymptotics", op,
                "t grid must be non-empty and strictly increasing");
  }
  if (!(t_grid.front() >= 100.0 && t_grid.back() <= kGridTop)) {
    throw Error(ErrorCode::domain, "moments_asymptotics", op, "t_max must lie in [100, 1e4]");
  }
  const auto pieces = make_pieces(1.0, t_grid.back(), t_grid);
  const auto parts = integrate_pieces(engine, pieces, options.threads);
  const MainTermPolynomial p = hall_poly(k, engine.stieltjes_table());
  const double norm = 1.0 / (std::pow(4.0, k) * (2.0 * k + 1.0));

  std::vector<MomentReport> out;
  std::size_t end = 0;
  for (double t : t_grid) {
    while (end < pieces.size() && pieces[end].hi <= t + 1e-12) ++end;
    MomentReport r;
    r.kind = k == 0 ? "continuous_k0" : "continuous_k1";
    r.t_max = t;
    r.computed = sum_range(parts, end)[k == 0 ? 0 : 1];
    r.predicted = norm * t * p.polynomial(log_over_2pi(t));
    r.envelope = continuous_envelope(k, t);
    fill_residual(r);
    r.parts = {{"hall_main_term", r.predicted}, {"ratio", r.computed / r.predicted}};
    out.push_back(r);
  }
  return out;
}

MomentReport continuous_moment(const ZetaEngine& engine, int k, double t_max,
                               const ContinuousOptions& options) {
  return continuous_moment_sweep(engine, k, {t_max}, options).front();
}

double continuous_moment_range(const ZetaEngine& engine, int k, double a, double b,
                               const ContinuousOptions& options) {
  check_continuous_k(k, "continuous_moment_range");
  if (!(a >= 1.0 && a <= b && b <= kGridTop)) {
    throw Error(ErrorCode::domain, "moments_asymptotics", "continuous_moment_range",
                "need 1 <= a <= b <= 1e4");
  }
  if (a == b) return 0.0;
  const auto parts = integrate_pieces(engine, make_pieces(a, b, {}), options.threads);
  return sum_range(parts, parts.size())[k == 0 ? 0 : 1];
}

WeightedMoment weighted_continuous_moment(const ZetaEngine& engine, double t_max,
                                          const ContinuousOptions& options) {
  if (!(t_max >= 2.0 * kPi - 1e-12 && t_max <= kGridTop)) {
    throw Error(ErrorCode::domain, "moments_asymptotics", "weighted_continuous_moment",
                "t_max must lie in [2pi, 1e4]");
  }
  const auto pieces = make_pieces(1.0, t_max, {});
  const auto parts = integrate_pieces(engine, pieces, options.threads);

  // int_1^T I(t)/t dt = sum over pieces of I(lo) log(hi/lo) + int Z'^2 log(hi/x) dx.
  std::vector<double> by_parts_terms(parts.size());
  CompensatedSum running;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    by_parts_terms[i] = running.value() * std::log(pieces[i].hi / pieces[i].lo) + parts[i][3];
    running.add(parts[i][1]);
  }
  const Vec4 total = sum_range(parts, parts.size());
  WeightedMoment out;
  MomentReport& r = out.report;
  r.kind = "weighted";
  r.t_max = t_max;
  r.computed = total[2] / (2.0 * kPi);
  out.by_parts = (log_over_2pi(t_max) * total[1] - pairwise_sum(by_parts_terms)) / (2.0 * kPi);
  out.by_parts_relative_residual =
      std::abs(out.by_parts - r.computed) / std::max(std::abs(r.computed), 1e-300);
  const TheoremMainTerm mt = main_term_theorem(engine.stieltjes_table());
  r.predicted = mt.b_block.value(t_max);
  r.envelope = theorem_envelope(t_max);
  fill_residual(r);
  r.parts = {{"b_block", r.predicted}, {"by_parts", out.by_parts}};
  return out;
}

MomentReport discrete_moment(const ZeroSet& zeros, const TheoremMainTerm& main_term, double t_max) {
  const double t = t_max < 0.0 ? zeros.t_max : t_max;
  if (t > zeros.t_max + 1e-9) {
    throw Error(ErrorCode::invalid_argument, "moments_asymptotics", "discrete_moment",
                "t_max exceeds the height of the zero set");
  }
  std::vector<double> terms;
  MomentReport r;
  for (const auto& z : zeros.zeros) {
    if (z.gamma > t) break;
    terms.push_back(z.z_prime * z.z_prime);
    r.flagged += z.flagged ? 1 : 0;
  }
  r.kind = "discrete";
  r.t_max = t;
  r.zero_count = static_cast<long>(terms.size());
  r.computed = pairwise_sum(terms);
  r.predicted = main_term.value(t);
  r.envelope = theorem_envelope(t);
  fill_residual(r);
  r.parts = {{"gonek_leading", main_term.leading.value(t)},
             {"b_block", main_term.b_block.value(t)},
             {"c_block", main_term.c_block.value(t)}};
  return r;
}

CBlockFit fit_c_block(const std::vector<MomentReport>& discrete, const TheoremMainTerm& main_term) {
  CBlockFit fit;
  fit.residue = main_term.c_block.coeffs;
  fit.residue.resize(4, 0.0);
  if (discrete.size() < 3) {
    throw Error(ErrorCode::invalid_argument, "moments_asymptotics", "fit_c_block",
                "need at least three heights");
  }
  const double c3 = fit.residue[3];
  double a[3][4] = {};
  for (const auto& r : discrete) {
    const double x = log_over_2pi(r.t_max);
    const double scale = r.t_max / kPi;
    const double y = (r.computed - main_term.b_block.value(r.t_max)) / scale - c3 * x * x * x;
    const double basis[3] = {1.0, x, x * x};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) a[i][j] += basis[i] * basis[j];
      a[i][3] += basis[i] * y;
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int row = col + 1; row < 3; ++row)
      if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
    std::swap(a[col], a[piv]);
    if (std::abs(a[col][col]) < 1e-300) {
      throw Error(ErrorCode::accuracy, "moments_asymptotics", "fit_c_block", "singular normal equations");
    }
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      const double f = a[row][col] / a[col][col];
      for (int j = col; j < 4; ++j) a[row][j] -= f * a[col][j];
    }
  }
  fit.fitted = {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2], c3};
  return fit;
}

Comparison compare(const ZetaEngine& engine, const ZeroSet& zeros, std::vector<double> t_grid) {
  if (t_grid.empty()) {
    throw Error(ErrorCode::invalid_argument, "moments_asymptotics", "compare", "empty t grid");
  }
  std::sort(t_grid.begin(), t_grid.end());
  t_grid.erase(std::unique(t_grid.begin(), t_grid.end()), t_grid.end());
  Comparison c;
  c.main_term = main_term_theorem(engine.stieltjes_table());
  for (double t : t_grid) c.reports.push_back(discrete_moment(zeros, c.main_term, t));
  c.zero_count = c.reports.back().zero_count;
  if (c.reports.size() >= 3) c.fit = fit_c_block(c.reports, c.main_term);
  return c;
}

}  // namespace zmoment
