#pragma once

#include <array>
#include <complex>

namespace zmoment {

using Complex = std::complex<double>;

/// B_{2k} for k = 1..20 (index k-1).
const std::array<double, 20>& bernoulli_even();

/// Principal branch of log Gamma: the analytic continuation of the real
/// log Gamma from the positive axis, with the cut on the negative real axis.
/// Lanczos (g = 7) for Re s >= 1/2, |Im s| <= 20; shifted Stirling otherwise.
/// Throws ErrorCode::pole at s = 0, -1, -2, ...
Complex log_gamma(Complex s);

// The two evaluation routes behind log_gamma, exposed for cross-checking.
Complex log_gamma_lanczos(Complex s);
Complex log_gamma_stirling(Complex s);

/// Digamma psi(s) = Gamma'/Gamma, by upward recurrence and the asymptotic
/// series.
Complex digamma(Complex s);

/// log sin(w) and log cos(w) modulo 2*pi*i, stable for large |Im w|.
Complex log_sin(Complex w);
Complex log_cos(Complex w);
/// cot(w), stable for large |Im w|.
Complex cot(Complex w);

/// log chi(s) modulo 2*pi*i, where chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s)
/// is the factor in zeta(s) = chi(s) zeta(1-s). For Re s > 1/2 the equivalent
/// form (2 pi)^s / (2 cos(pi s/2) Gamma(s)) is used, which stays finite at the
/// removable singularities s = 2, 4, 6, ...
Complex log_chi(Complex s);

/// chi(s), exponentiated from log_chi. Throws ErrorCode::pole at s = 1, 3, 5,
/// ... and ErrorCode::overflow when |chi| is not representable.
Complex chi(Complex s);

/// omega(s) = chi'(s)/chi(s) = log 2 + log pi + (pi/2) cot(pi s/2) - psi(1-s).
/// Requires |Im s| >= 1.
Complex omega(Complex s);

/// Riemann-Siegel theta: Im log Gamma(1/4 + it/2) - (t/2) log pi, on the
/// continuous branch with theta(0) = 0. Requires t >= 1.
double riemann_siegel_theta(double t);
/// theta'(t) = Re psi(1/4 + it/2)/2 - (log pi)/2. Requires t >= 1.
double riemann_siegel_theta_prime(double t);

}  // namespace zmoment
