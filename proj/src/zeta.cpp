#include "zmoment/zeta.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "zmoment/error.hpp"

namespace zmoment {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLaurentRadius = 0.1;
constexpr int kMinBernoulliTerms = 6;

// Taylor jet in ds: (f, f', f''/2).
struct Jet {
  Complex c0, c1, c2;
};

Jet operator*(const Jet& a, const Jet& b) {
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
}
Jet operator+(const Jet& a, const Jet& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
Jet operator*(double w, const Jet& a) { return {w * a.c0, w * a.c1, w * a.c2}; }

double jet_magnitude(const Jet& j, int max_order) {
  double m = std::abs(j.c0);
  if (max_order >= 1) m = std::max(m, std::abs(j.c1));
  if (max_order >= 2) m = std::max(m, 2.0 * std::abs(j.c2));
  return m;
}

struct LogTables {
  std::vector<double> log_n;
  std::vector<double> inv_sqrt_n;
};

// log n and n^{-1/2} for every n the engine can need; built once, read-only.
const LogTables& log_tables() {
  static const LogTables tables = [] {
    const int n_max = ZetaEngine::euler_maclaurin_terms(kMaxImaginaryPart) + 1;
    LogTables t;
    t.log_n.resize(static_cast<std::size_t>(n_max) + 1);
    t.inv_sqrt_n.resize(static_cast<std::size_t>(n_max) + 1);
    t.log_n[0] = 0.0;
    t.inv_sqrt_n[0] = 0.0;
    for (int n = 1; n <= n_max; ++n) {
      t.log_n[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));
      t.inv_sqrt_n[static_cast<std::size_t>(n)] = 1.0 / std::sqrt(static_cast<double>(n));
    }
    return t;
  }();
  return tables;
}

[[noreturn]] void zeta_error(ErrorCode code, const char* op, const std::string& why) {
  throw Error(code, "zeta_engine", op, why);
}

}  // namespace

int ZetaEngine::euler_maclaurin_terms(double t) {
  return std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(t))));
}

ZetaEngine::ZetaEngine(PrecisionConfig config) : config_(config) {
  config_.validate();
  gammas_ = stieltjes(6, config_.max_series_terms);
  near_one_[0] = series_zeta(gammas_, gammas_.h_max());
  near_one_[1] = near_one_[0].derivative();
  near_one_[2] = near_one_[1].derivative();
  (void)log_tables();
}

std::array<Complex, 3> ZetaEngine::near_pole(Complex s, int max_order, double* est) const {
  const Complex u = s - 1.0;
  std::array<Complex, 3> out{};
  double err = 0.0;
  for (int k = 0; k <= max_order; ++k) {
    const auto& ser = near_one_[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = ser.evaluate<Complex>(u);
    // First omitted term, bounded by the size of the last kept coefficient.
    const int kk = ser.trunc_order();
    err = std::max(err, std::abs(ser.coeff(kk)) * std::pow(std::abs(u), kk + 1) + ser.est_err());
  }
  if (est) *est = err;
  return out;
}

std::array<Complex, 3> ZetaEngine::euler_maclaurin(Complex s, int max_order, double* est) const {
  const auto& tab = log_tables();
  const double sigma = s.real(), t = s.imag();
  const int n_terms = euler_maclaurin_terms(t);

  // Direct sum over n < N.
  Complex s0 = 0.0, s1 = 0.0, s2 = 0.0;
  double mag0 = 0.0, mag1 = 0.0, mag2 = 0.0;
  const bool half_line = sigma == 0.5;
  for (int n = 1; n < n_terms; ++n) {
    const double l = tab.log_n[static_cast<std::size_t>(n)];
    const double a = half_line ? tab.inv_sqrt_n[static_cast<std::size_t>(n)] : std::exp(-sigma * l);
    const double ph = t * l;
    const Complex v(a * std::cos(ph), -a * std::sin(ph));
    s0 += v;
    mag0 += a;
    if (max_order >= 1) {
      s1 += l * v;
      mag1 += l * a;
      if (max_order >= 2) {
        s2 += (l * l) * v;
        mag2 += l * l * a;
      }
    }
  }
  Jet sum{s0, -s1, 0.5 * s2};

  // Tail corrections at N.
  const double big_n = n_terms;
  const double ln = tab.log_n[static_cast<std::size_t>(n_terms)];
  const Complex w = std::exp(-s * ln);
  const Jet pow_n{w, -ln * w, 0.5 * ln * ln * w};
  const Complex inv_u = 1.0 / (s - 1.0);
  const Jet pole{inv_u, -inv_u * inv_u, inv_u * inv_u * inv_u};
  sum = sum + big_n * (pow_n * pole) + 0.5 * pow_n;

  const auto& bern = bernoulli_even();
  const int k_max = std::min<int>(config_.max_series_terms, static_cast<int>(bern.size()));
  Jet poch{s, 1.0, 0.0};  // s (s+1) ... (s+2k-2)
  double fact = 2.0;      // (2k)!
  double npow = 1.0 / big_n;
  double tail_err = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  const double stop = 1e-3 * config_.target_abs_tol;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) {
      poch = poch * Jet{s + (2.0 * k - 3.0), 1.0, 0.0} * Jet{s + (2.0 * k - 2.0), 1.0, 0.0};
      fact *= (2.0 * k - 1.0) * (2.0 * k);
      npow /= big_n * big_n;
    }
    const Jet term = (bern[static_cast<std::size_t>(k - 1)] / fact * npow) * (poch * pow_n);
    const double mag = jet_magnitude(term, max_order);
    tail_err = mag;
    if (k > kMinBernoulliTerms && (mag < stop || mag > previous)) break;
    sum = sum + term;
    previous = mag;
  }

  const double mag_n = std::exp(-sigma * ln) * big_n;
  double round = 4.0 * kEps * (mag0 + mag_n);
  if (max_order >= 1) round = std::max(round, 4.0 * kEps * (mag1 + ln * mag_n));
  if (max_order >= 2) round = std::max(round, 4.0 * kEps * (mag2 + ln * ln * mag_n));
  if (est) *est = tail_err + round;
  return {sum.c0, sum.c1, 2.0 * sum.c2};
}

std::array<Complex, 3> ZetaEngine::zeta_derivatives(Complex s, int max_order, double* est_abs_err) const {
  if (max_order < 0 || max_order > 2) {
    zeta_error(ErrorCode::invalid_argument, "zeta", "derivative order must be 0, 1 or 2");
  }
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    zeta_error(ErrorCode::domain, "zeta", "non-finite argument");
  }
  const double dist = std::abs(s - 1.0);
  if (dist < 1e-8) zeta_error(ErrorCode::pole, "zeta", "s lies on the pole at s = 1");
  if (std::abs(s.imag()) > kMaxImaginaryPart) {
    zeta_error(ErrorCode::envelope, "zeta",
               "|Im s| = " + std::to_string(std::abs(s.imag())) + " exceeds the supported 1e5");
  }
  double est = 0.0;
  std::array<Complex, 3> out =
      dist < kLaurentRadius ? near_pole(s, max_order, &est) : euler_maclaurin(s, max_order, &est);
  double scale = 0.0;
  for (int k = 0; k <= max_order; ++k) scale = std::max(scale, std::abs(out[static_cast<std::size_t>(k)]));
  const double allowed = std::max(config_.target_abs_tol, config_.target_rel_tol * scale);
  if (!(est <= allowed)) {
    zeta_error(ErrorCode::accuracy, "zeta",
               "error estimate " + std::to_string(est) + " exceeds tolerance " + std::to_string(allowed));
  }
  if (est_abs_err) *est_abs_err = est;
  return out;
}

ZetaEvaluation ZetaEngine::zeta(Complex s, int order) const {
  double est = 0.0;
  const auto d = zeta_derivatives(s, order, &est);
  return {d[static_cast<std::size_t>(order)], order, est};
}

HardyValues ZetaEngine::hardy(double t) const {
  if (!(t >= 1.0)) zeta_error(ErrorCode::domain, "hardy_z", "Z(t) requires t >= 1");
  HardyValues h;
  h.theta = riemann_siegel_theta(t);
  h.theta_prime = riemann_siegel_theta_prime(t);
  const auto d = zeta_derivatives(Complex(0.5, t), 1);
  h.zeta = d[0];
  h.zeta_prime = d[1];
  const Complex rot = std::polar(1.0, h.theta);
  const Complex z = rot * h.zeta;
  if (std::abs(z.imag()) > 1e-7 * (1.0 + std::abs(h.zeta))) {
    zeta_error(ErrorCode::accuracy, "hardy_z",
               "e^{i theta} zeta(1/2+it) has imaginary part " + std::to_string(z.imag()));
  }
  h.z = z.real();
  h.z_prime = (Complex(0.0, 1.0) * rot * (h.theta_prime * h.zeta + h.zeta_prime)).real();
  return h;
}

double ZetaEngine::hardy_z(double t) const {
  if (!(t >= 1.0)) zeta_error(ErrorCode::domain, "hardy_z", "Z(t) requires t >= 1");
  const double theta = riemann_siegel_theta(t);
  const Complex zeta_val = zeta_derivatives(Complex(0.5, t), 0)[0];
  const Complex z = std::polar(1.0, theta) * zeta_val;
  if (std::abs(z.imag()) > 1e-7 * (1.0 + std::abs(zeta_val))) {
    zeta_error(ErrorCode::accuracy, "hardy_z",
               "e^{i theta} zeta(1/2+it) has imaginary part " + std::to_string(z.imag()));
  }
  return z.real();
}

double ZetaEngine::hardy_z_prime(double t) const { return hardy(t).z_prime; }

Z1Value ZetaEngine::z1(Complex s) const {
  if (!(std::abs(s.imag()) >= 1.0)) {
    zeta_error(ErrorCode::domain, "z1", "Z_1(s) requires |Im s| >= 1");
  }
  const auto d = zeta_derivatives(s, 1);
  return {s, d[1] - 0.5 * omega(s) * d[0]};
}

}  // namespace zmoment
