#include "zmoment/special_fn.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zmoment/error.hpp"

namespace zmoment {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741434273513531;
constexpr double kLog2Pi = 1.8378770664093454835606594728112;
constexpr double kLog2 = std::numbers::ln2;

// Below this modulus the Stirling series is reached by upward recurrence.
constexpr double kStirlingRadius = 20.0;
constexpr int kStirlingTerms = 10;

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;

void check_pole(Complex s, const char* op) {
  if (std::abs(s.imag()) < 1e-12 && s.real() < 0.5) {
    const double r = std::round(s.real());
    if (r <= 0.0 && std::abs(s.real() - r) < 1e-12) {
      throw Error(ErrorCode::pole, "special_fn", op,
                  "Gamma has a pole at s = " + std::to_string(r));
    }
  }
}

// Number of unit shifts needed before the Stirling series applies.
int stirling_shift(Complex z) {
  const double ay = std::abs(z.imag());
  if (std::abs(z) >= kStirlingRadius && z.real() >= -ay) return 0;
  if (z.real() >= kStirlingRadius) return 0;
  return static_cast<int>(std::ceil(kStirlingRadius - z.real()));
}

}  // namespace

const std::array<double, 20>& bernoulli_even() {
  static const std::array<double, 20> table = {
      1.66666666666666657e-01,  -3.33333333333333329e-02,
      2.38095238095238082e-02,  -3.33333333333333329e-02,
      7.57575757575757597e-02,  -2.53113553113553102e-01,
      1.16666666666666674e+00,  -7.09215686274509771e+00,
      5.49711779448621556e+01,  -5.29124242424242425e+02,
      6.19212318840579701e+03,  -8.65802531135531171e+04,
      1.42551716666666674e+06,  -2.72982310678160936e+07,
      6.01580873900642395e+08,  -1.51163157670921574e+10,
      4.29614643061166687e+11,  -1.37116552050883320e+13,
      4.88332318973593188e+14,  -1.92965793419400680e+16};
  return table;
}

Complex log_gamma_lanczos(Complex s) {
  check_pole(s, "log_gamma");
  const Complex z = s - 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * kLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

Complex log_gamma_stirling(Complex s) {
  check_pole(s, "log_gamma");
  const int n = stirling_shift(s);
  Complex shift_sum = 0.0;
  for (int k = 0; k < n; ++k) shift_sum += std::log(s + static_cast<double>(k));
  const Complex z = s + static_cast<double>(n);
  const auto& b = bernoulli_even();
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex p = inv;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    series += b[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi + series - shift_sum;
}

Complex log_gamma(Complex s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw Error(ErrorCode::domain, "special_fn", "log_gamma", "non-finite argument");
  if (s.real() >= 0.5 && std::abs(s.imag()) <= 20.0) return log_gamma_lanczos(s);
  return log_gamma_stirling(s);
}

Complex digamma(Complex s) {
  check_pole(s, "digamma");
  const int n = stirling_shift(s);
  Complex shift_sum = 0.0;
  for (int k = 0; k < n; ++k) shift_sum += 1.0 / (s + static_cast<double>(k));
  const Complex z = s + static_cast<double>(n);
  const auto& b = bernoulli_even();
  const Complex inv2 = 1.0 / (z * z);
  Complex series = 0.0;
  Complex p = inv2;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    series += b[k - 1] / (2.0 * k) * p;
    p *= inv2;
  }
  return std::log(z) - 0.5 / z - series - shift_sum;
}

Complex log_sin(Complex w) {
  const Complex i(0.0, 1.0);
  const double y = w.imag();
  if (y > 1.0) return -i * w + std::log(1.0 - std::exp(2.0 * i * w)) + std::log(0.5 * i);
  if (y < -1.0) return i * w + std::log(1.0 - std::exp(-2.0 * i * w)) + std::log(-0.5 * i);
  return std::log(std::sin(w));
}

Complex log_cos(Complex w) {
  const Complex i(0.0, 1.0);
  const double y = w.imag();
  if (y > 1.0) return -i * w + std::log(1.0 + std::exp(2.0 * i * w)) - kLog2;
  if (y < -1.0) return i * w + std::log(1.0 + std::exp(-2.0 * i * w)) - kLog2;
  return std::log(std::cos(w));
}

Complex cot(Complex w) {
  const Complex i(0.0, 1.0);
  if (w.imag() >= 0.0) {
    const Complex e = std::exp(2.0 * i * w);
    return i * (e + 1.0) / (e - 1.0);
  }
  const Complex e = std::exp(-2.0 * i * w);
  return i * (1.0 + e) / (1.0 - e);
}

Complex log_chi(Complex s) {
  if (s.real() <= 0.5) {
    // zeros of sin(pi s / 2) at s = 0, -2, ... give log 0 = -inf, i.e. chi = 0.
    return s * kLog2 + (s - 1.0) * kLogPi + log_sin(0.5 * kPi * s) + log_gamma(1.0 - s);
  }
  const Complex lc = log_cos(0.5 * kPi * s);
  if (!std::isfinite(lc.real())) {
    throw Error(ErrorCode::pole, "special_fn", "chi",
                "chi has a pole at s = " + std::to_string(s.real()));
  }
  return s * kLog2Pi - kLog2 - lc - log_gamma(s);
}

Complex chi(Complex s) {
  const Complex l = log_chi(s);
  if (l.real() == -std::numeric_limits<double>::infinity()) return 0.0;
  if (!(l.real() < 709.0)) {
    throw Error(ErrorCode::overflow, "special_fn", "chi",
                "|chi(s)| exceeds the double range (log|chi| = " +
                    std::to_string(l.real()) + ")");
  }
  return std::exp(l);
}

Complex omega(Complex s) {
  if (!(std::abs(s.imag()) >= 1.0)) {
    throw Error(ErrorCode::domain, "special_fn", "omega",
                "omega requires |Im s| >= 1, got " + std::to_string(s.imag()));
  }
  return kLog2 + kLogPi + 0.5 * kPi * cot(0.5 * kPi * s) - digamma(1.0 - s);
}

double riemann_siegel_theta(double t) {
  if (!(t >= 1.0)) {
    throw Error(ErrorCode::domain, "special_fn", "riemann_siegel_theta",
                "theta requires t >= 1, got " + std::to_string(t));
  }
  return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * kLogPi;
}

double riemann_siegel_theta_prime(double t) {
  if (!(t >= 1.0)) {
    throw Error(ErrorCode::domain, "special_fn", "riemann_siegel_theta_prime",
                "theta requires t >= 1, got " + std::to_string(t));
  }
  return 0.5 * digamma(Complex(0.25, 0.5 * t)).real() - 0.5 * kLogPi;
}

}  // namespace zmoment
