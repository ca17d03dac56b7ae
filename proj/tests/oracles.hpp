// Independent reference computations used only by the tests. None of them
// shares code with the library evaluators.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

// Gamma(1/2) = 2 int_0^inf exp(-u^2) du by composite Simpson on [0, 10].
inline double gamma_half() {
  const int n = 20000;
  const double h = 10.0 / n;
  double s = 1.0 + std::exp(-100.0);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * std::exp(-(i * h) * (i * h));
  return 2.0 * s * h / 3.0;
}

// zeta(s), Re s > 0, from Borwein's accelerated alternating series for the
// Dirichlet eta function. The d_k weights are normalised by d_n in log space
// so large n (needed at large Im s) does not overflow.
inline cplx zeta_borwein(cplx s) {
  const int n = 40 + static_cast<int>(1.2 * std::abs(s.imag()));
  std::vector<double> log_terms(n + 1);
  for (int i = 0; i <= n; ++i) {
    log_terms[i] = std::log(static_cast<double>(n)) + std::lgamma(n + i) - std::lgamma(n - i + 1.0) -
                   std::lgamma(2.0 * i + 1.0) + i * std::log(4.0);
  }
  double top = log_terms[0];
  for (double v : log_terms) top = std::max(top, v);
  std::vector<double> d(n + 1);
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    acc += std::exp(log_terms[i] - top);
    d[i] = acc;
  }
  const double dn = d[n];
  cplx sum = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const double w = (d[k] - dn) / dn;
    const cplx term = w * std::exp(-s * std::log(static_cast<double>(k + 1)));
    sum += (k % 2 == 0) ? term : -term;
  }
  const cplx eta = -sum;
  return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

// order-th derivative of an analytic f by the trapezoidal Cauchy formula.
inline cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx s, int order, double r = 0.05,
                              int nodes = 64) {
  cplx acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const cplx e = std::polar(1.0, 2.0 * pi * j / nodes);
    acc += f(s + r * e) / std::pow(e, order);
  }
  return acc / static_cast<double>(nodes) * std::tgamma(order + 1.0) / std::pow(r, order);
}

inline cplx zeta_deriv(cplx s, int order) {
  if (order == 0) return zeta_borwein(s);
  return cauchy_derivative(zeta_borwein, s, order);
}

// gamma_h from the defining limit at n = 20000 with the trapezoid and first
// end-point derivative corrections.
inline double stieltjes_limit(int h) {
  const int n = 20000;
  long double sum = 0.0L, comp = 0.0L;
  for (int k = 1; k <= n; ++k) {
    const long double lk = std::log(static_cast<long double>(k));
    const long double y = std::pow(lk, h) / k - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const long double ln = std::log(static_cast<long double>(n));
  const long double f = std::pow(ln, h) / n;
  const long double fp = ((h > 0 ? h * std::pow(ln, h - 1) : 0.0L) - std::pow(ln, h)) / (static_cast<long double>(n) * n);
  return static_cast<double>(sum - std::pow(ln, h + 1) / (h + 1) - f / 2 - fp / 12);
}

inline double bisect(const std::function<double(double)>& f, double a, double b, double tol = 1e-13) {
  double fa = f(a);
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// (1/2 pi i) contour integral of F(s) g(s) over |s - 1| = radius, trapezoid.
inline cplx contour(const std::function<cplx(cplx)>& integrand, double radius = 0.5, int nodes = 2048) {
  cplx acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const cplx e = std::polar(1.0, 2.0 * pi * j / nodes);
    acc += integrand(1.0 + radius * e) * radius * e;
  }
  return acc / static_cast<double>(nodes);
}

// Brute-force Dirichlet coefficients by trial division.
inline double von_mangoldt(long n) {
  if (n < 2) return 0.0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return std::log(static_cast<double>(n));
}

inline double divisor_d(long n) {
  double s = 0.0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += std::log(static_cast<double>(d)) * std::log(static_cast<double>(n / d));
  return s;
}

}  // namespace oracle
