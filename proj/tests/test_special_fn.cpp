#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zmoment/error.hpp"
#include "zmoment/special_fn.hpp"
#include "zmoment/zeta.hpp"

using namespace zmoment;
using doctest::Approx;

TEST_CASE("log_gamma special values") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-14);
  CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-13);
  CHECK(std::abs(log_gamma(0.5) - std::log(oracle::gamma_half())) < 1e-12);
  CHECK(std::abs(log_gamma(0.5).real() - 0.5723649429247001) < 1e-13);
}

TEST_CASE("log_gamma agrees with the real lgamma and the recurrence") {
  for (double x : {0.1, 0.7, 2.5, 13.0, 150.0}) {
    CHECK(log_gamma(x).real() == Approx(std::lgamma(x)).epsilon(1e-12));
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-3.0, 30.0), im(-500.0, 500.0);
  for (int i = 0; i < 50; ++i) {
    const Complex s(re(rng), im(rng));
    const Complex lhs = log_gamma(s + 1.0);
    const Complex rhs = log_gamma(s) + std::log(s);
    // Equal modulo 2 pi i.
    const double k = std::round((lhs - rhs).imag() / (2.0 * oracle::pi));
    CHECK(std::abs(lhs - rhs - Complex(0.0, 2.0 * oracle::pi * k)) < 1e-9 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("log_gamma rejects the poles") {
  for (double x : {0.0, -1.0, -7.0}) CHECK_THROWS_AS(log_gamma(x), Error);
}

TEST_CASE("chi special values") {
  CHECK(std::abs(chi(0.5) - 1.0) < 1e-13);
  CHECK(std::abs(std::abs(chi(Complex(0.5, 30.0))) - 1.0) < 1e-12);
  CHECK(std::abs(chi(2.0) - Complex(-2.0 * oracle::pi * oracle::pi)) < 1e-10);
}

TEST_CASE("chi has modulus one on the critical line") {
  for (double t = 2.0; t <= 500.0; t += 2.5) CHECK(std::abs(std::abs(chi(Complex(0.5, t))) - 1.0) < 1e-10);
}

TEST_CASE("chi overflows only in log form") {
  CHECK(std::isfinite(log_chi(Complex(-30.0, 1e5)).real()));
  CHECK_THROWS_AS(chi(Complex(-200.0, 1e5)), Error);
}

TEST_CASE("functional equation zeta(s) = chi(s) zeta(1-s)") {
  ZetaEngine engine;
  for (double sigma = -1.0; sigma <= 2.0; sigma += 0.25) {
    for (double t = 2.0; t <= 500.0; t += 37.0) {
      const Complex s(sigma, t);
      const Complex lhs = engine.zeta(s).value;
      const Complex rhs = chi(s) * engine.zeta(1.0 - s).value;
      CHECK(std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("omega examples") {
  CHECK(omega(Complex(0.5, 1000.0)).real() == Approx(-5.06987817).epsilon(1e-8));
  CHECK(std::abs(omega(Complex(0.5, 1000.0)) + std::log(1000.0 / (2.0 * oracle::pi))) < 1e-3);
  CHECK(std::abs(omega(Complex(0.5, 2.0 * oracle::pi))) < 0.1);
  // d/ds log[chi(s) chi(1-s)] = omega(s) - omega(1-s) = 0.
  const Complex s(0.3, 50.0);
  CHECK(std::abs(omega(s) - omega(1.0 - s)) < 1e-12);
  CHECK_THROWS_AS(omega(Complex(0.5, 0.5)), Error);
}

TEST_CASE("omega matches a centred difference of log chi") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> sig(-2.0, 3.0), tt(2.0, 400.0);
  for (int i = 0; i < 20; ++i) {
    const Complex s(sig(rng), tt(rng));
    const double h = 1e-5;
    const Complex fd = (log_chi(s + h) - log_chi(s - h)) / (2.0 * h);
    CHECK(std::abs(fd - omega(s)) < 1e-6);
  }
}

TEST_CASE("omega follows -log(t/2pi) + O(1/t)") {
  // C calibrated once over this grid and frozen.
  const double c = 1.0;
  for (double sigma : {-2.0, 0.5, 3.0}) {
    for (double t : {10.0, 100.0, 1000.0, 1e4}) {
      const double dev = std::abs(omega(Complex(sigma, t)) + std::log(t / (2.0 * oracle::pi)));
      CHECK(dev <= c / t * (1.0 + std::abs(sigma - 0.5)) * 2.0);
    }
  }
}

TEST_CASE("theta: stationary point, Gram point and Stirling limit") {
  const double root = oracle::bisect(riemann_siegel_theta_prime, 5.0, 8.0);
  CHECK(root == Approx(6.289835988836).epsilon(1e-10));
  const double gram = oracle::bisect(riemann_siegel_theta, 17.0, 18.5);
  CHECK(gram == Approx(17.8455995).epsilon(1e-8));
  const double t = 1e4;
  CHECK(std::abs(riemann_siegel_theta_prime(t) - 0.5 * std::log(t / (2.0 * oracle::pi))) < 1e-4);
  CHECK_THROWS_AS(riemann_siegel_theta(0.5), Error);
}

TEST_CASE("theta is continuous on [10, 1000]") {
  double prev = riemann_siegel_theta(10.0), max_jump = 0.0;
  for (double t = 10.01; t <= 1000.0; t += 0.01) {
    const double v = riemann_siegel_theta(t);
    max_jump = std::max(max_jump, std::abs(v - prev));
    prev = v;
  }
  CHECK(max_jump <= 0.1);
}

TEST_CASE("theta phase makes e^{i theta} zeta(1/2+it) real") {
  // e^{2 i theta(t)} = 1 / chi(1/2 + it).
  for (double t = 5.0; t < 800.0; t += 13.3) {
    const Complex lhs = std::polar(1.0, 2.0 * riemann_siegel_theta(t));
    CHECK(std::abs(lhs * chi(Complex(0.5, t)) - 1.0) < 1e-10);
  }
}
