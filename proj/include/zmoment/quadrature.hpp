#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "zmoment/error.hpp"

namespace zmoment::quad {

/// Fixed-size vector of reals so several integrands sharing one expensive
/// evaluation can be integrated in a single pass.
template <std::size_t N>
struct Vec {
  std::array<double, N> v{};

  Vec& operator+=(const Vec& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] += o.v[i];
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < N; ++i) a.v[i] -= b.v[i];
    return a;
  }
  friend Vec operator*(double w, Vec a) {
    for (auto& x : a.v) x *= w;
    return a;
  }
  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
};

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(std::complex<double> z) { return std::abs(z); }
template <std::size_t N>
double magnitude(const Vec<N>& x) {
  double m = 0.0;
  for (double c : x.v) m = std::max(m, std::abs(c));
  return m;
}

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

/// The 15 Kronrod nodes mapped onto [a, b], ascending.
inline std::array<double, 15> gk15_nodes(double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::array<double, 15> x{};
  for (int j = 0; j < 7; ++j) {
    x[j] = c - h * kXgk[j];
    x[14 - j] = c + h * kXgk[j];
  }
  x[7] = c;
  return x;
}

template <class V>
struct RuleResult {
  V kronrod{};
  V gauss{};
  double error = 0.0;
};

/// Applies the 7/15 pair to precomputed integrand values at gk15_nodes(a, b).
template <class V>
RuleResult<V> gk15_from_values(const std::array<V, 15>& f, double a, double b) {
  const double h = 0.5 * (b - a);
  V k = kWgk[7] * f[7];
  V g = kWg[3] * f[7];
  for (int j = 0; j < 7; ++j) {
    const V pair = f[j] + f[14 - j];
    k += kWgk[j] * pair;
    if (j % 2 == 1) g += kWg[j / 2] * pair;
  }
  RuleResult<V> r;
  r.kronrod = h * k;
  r.gauss = h * g;
  r.error = magnitude(r.kronrod - r.gauss);
  return r;
}

template <class V, class F>
RuleResult<V> gk15(F&& f, double a, double b) {
  const auto x = gk15_nodes(a, b);
  std::array<V, 15> fx;
  for (int j = 0; j < 15; ++j) fx[j] = f(x[j]);
  return gk15_from_values<V>(fx, a, b);
}

template <class V>
struct Integral {
  V value{};
  double error = 0.0;
  int evaluations = 0;
};

/// Recursive bisection on the 7/15 error estimate. The recursion tree depends
/// only on (a, b, tol), never on scheduling, so results are reproducible.
template <class V, class F>
Integral<V> adaptive(F&& f, double a, double b, double abs_tol,
                     int max_depth = 12) {
  Integral<V> out;
  double worst_err = 0.0, worst_lo = a, worst_hi = b;
  bool failed = false;
  auto recurse = [&](auto& self, double lo, double hi, double tol,
                     int depth) -> void {
    const auto r = gk15<V>(f, lo, hi);
    out.evaluations += 15;
    if (std::isnan(r.error)) {
      throw Error(ErrorCode::quadrature, "quadrature", "adaptive",
                  "non-finite integrand on [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
    }
    if (r.error <= tol) {
      out.value += r.kronrod;
      out.error += r.error;
      return;
    }
    if (depth >= max_depth) {
      failed = true;
      if (r.error > worst_err) {
        worst_err = r.error;
        worst_lo = lo;
        worst_hi = hi;
      }
      out.value += r.kronrod;
      out.error += r.error;
      return;
    }
    const double mid = 0.5 * (lo + hi);
    self(self, lo, mid, 0.5 * tol, depth + 1);
    self(self, mid, hi, 0.5 * tol, depth + 1);
  };
  recurse(recurse, a, b, abs_tol, 0);
  if (failed) {
    throw Error(ErrorCode::quadrature, "quadrature", "adaptive",
                "tolerance not reached; worst panel [" +
                    std::to_string(worst_lo) + ", " + std::to_string(worst_hi) +
                    "] error " + std::to_string(worst_err));
  }
  return out;
}

}  // namespace zmoment::quad
