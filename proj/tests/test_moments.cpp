#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zmoment/error.hpp"
#include "zmoment/moments.hpp"
#include "zmoment/quadrature.hpp"

using namespace zmoment;
using doctest::Approx;

namespace {
const ZetaEngine& engine() {
  static const ZetaEngine e;
  return e;
}
const StieltjesTable& gammas() { return engine().stieltjes_table(); }

StieltjesTable zero_table() {
  StieltjesTable t;
  t.values.assign(7, 0.0);
  t.est_err.assign(7, 0.0);
  return t;
}
}  // namespace

TEST_CASE("W polynomials") {
  CHECK(w_poly(0).coeffs == std::vector<double>{1.0});
  CHECK(w_poly(1).coeffs == std::vector<double>{-1.0, 1.0});
  CHECK(w_poly(3).coeffs == std::vector<double>{-6.0, 6.0, -3.0, 1.0});
  CHECK_THROWS_AS(w_poly(7), Error);
}

TEST_CASE("W polynomials match the defining integral") {
  // W_g(v) = e^{-v} int_0^{e^v} log^g u du = int_{-inf}^{v} w^g e^{w - v} dw.
  for (int g = 0; g <= 6; ++g) {
    for (double v : {0.5, 2.0, 4.0}) {
      auto f = [&](double w) { return std::pow(w, g) * std::exp(w - v); };
      const double integral = quad::adaptive<double>(f, v - 60.0, v, 1e-12, 30).value;
      CHECK(w_poly(g).polynomial(v) == Approx(integral).epsilon(1e-9));
    }
  }
}

TEST_CASE("Hall polynomials") {
  const auto p1 = hall_poly(0, gammas());
  REQUIRE(p1.coeffs.size() == 2);
  CHECK(p1.coeffs[0] == Approx(-1.0 + 2.0 * gammas()[0]));
  CHECK(p1.coeffs[1] == 1.0);
  const auto p3 = hall_poly(1, gammas());
  const auto printed = p3_expanded(gammas());
  REQUIRE(p3.coeffs.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(p3.coeffs[i] - printed.coeffs[i]) <= 1e-12);
  for (int k = 0; k <= 2; ++k) {
    const auto p = hall_poly(k, gammas());
    CHECK(p.degree() == 2 * k + 1);
    CHECK(p.coeffs.back() == 1.0);
  }
  StieltjesTable shallow;
  shallow.values = {0.5, 0.1};
  shallow.est_err = {0.0, 0.0};
  CHECK_THROWS_AS(hall_poly(1, shallow), Error);
}

TEST_CASE("theorem main term assembly") {
  const auto m = main_term_theorem(gammas());
  const double pi = oracle::pi;
  REQUIRE(m.total.coeffs.size() == 5);
  CHECK(std::abs(m.total.coeffs[4] - 1.0 / (24.0 * pi)) <= 1e-12);
  CHECK(std::abs(m.total.coeffs[3] - (2.0 * gammas()[0] - 1.0) / (6.0 * pi)) <= 1e-12);
  const auto b = m.b_block.absolute_coeffs();
  const auto c = m.c_block.absolute_coeffs();
  CHECK(std::abs(b[3] - (3.0 * gammas()[0] - 2.0) / (12.0 * pi)) <= 1e-12);
  CHECK(std::abs(c[3] - gammas()[0] / (12.0 * pi)) <= 1e-12);
  CHECK(std::abs(c[4]) <= 1e-15);
  CHECK(m.generating_signs == std::vector<int>{-1, -1, -1});
}

TEST_CASE("main term with vanishing Stieltjes constants") {
  const auto m = main_term_theorem(zero_table());
  // b-block: x W_3(x) - sum_k w3_k W_k(x) with W_3 = x^3 - 3x^2 + 6x - 6.
  const auto w3 = w_poly(3).coeffs;
  for (double x : {1.0, 3.0, 6.5}) {
    double want = x * w_poly(3).polynomial(x);
    for (int k = 0; k <= 3; ++k) want -= w3[static_cast<std::size_t>(k)] * w_poly(k).polynomial(x);
    CHECK(m.b_block.polynomial(x) == Approx(want).epsilon(1e-13));
  }
  // d/dT [T b(log(T/2pi))] = b + b' must reduce to x^4 when P_3 = W_3.
  for (double x : {0.5, 2.0, 5.0}) {
    const auto& cb = m.b_block.coeffs;
    double poly = 0.0, deriv = 0.0;
    for (std::size_t i = 0; i < cb.size(); ++i) {
      poly += cb[i] * std::pow(x, static_cast<double>(i));
      if (i) deriv += static_cast<double>(i) * cb[i] * std::pow(x, static_cast<double>(i) - 1.0);
    }
    CHECK(poly + deriv == Approx(std::pow(x, 4)).epsilon(1e-12));
  }
}

TEST_CASE("continuous moments against Hall's formula") {
  const auto k0 = continuous_moment(engine(), 0, 2000.0);
  CHECK(k0.computed / k0.predicted >= 0.95);
  CHECK(k0.computed / k0.predicted <= 1.05);
  const auto k1 = continuous_moment(engine(), 1, 2000.0);
  CHECK(k1.computed / k1.predicted >= 0.9);
  CHECK(k1.computed / k1.predicted <= 1.1);
  CHECK(k0.residual == k0.computed - k0.predicted);
  CHECK_THROWS_AS(continuous_moment(engine(), 2, 500.0), Error);
  CHECK_THROWS_AS(continuous_moment(engine(), 0, 50.0), Error);
}

TEST_CASE("continuous moment is additive") {
  const double a = continuous_moment(engine(), 0, 300.0).computed;
  const double ab = continuous_moment_range(engine(), 0, 300.0, 700.0);
  const double b = continuous_moment(engine(), 0, 700.0).computed;
  CHECK(std::abs(a + ab - b) <= 1e-9 * b);
}

TEST_CASE("continuous moment quadrature matches plain adaptive integration") {
  auto f = [](double t) { return std::pow(engine().hardy_z(t), 2); };
  double plain = 0.0;
  for (double lo = 150.0; lo < 200.0; lo += 1.0) plain += quad::adaptive<double>(f, lo, lo + 1.0, 1e-11, 20).value;
  CHECK(continuous_moment_range(engine(), 0, 150.0, 200.0) == Approx(plain).epsilon(1e-9));
}

TEST_CASE("weighted moment") {
  const auto small = weighted_continuous_moment(engine(), 2.0 * oracle::pi);
  // log(t/2pi) < 0 on the whole range [1, 2pi).
  CHECK(small.report.computed < 0.0);
  CHECK(std::abs(small.report.computed) < 0.1);
  const auto w500 = weighted_continuous_moment(engine(), 500.0);
  CHECK(w500.by_parts_relative_residual <= 1e-5);
  const auto w2000 = weighted_continuous_moment(engine(), 2000.0);
  CHECK(w2000.report.computed / w2000.report.predicted >= 0.9);
  CHECK(w2000.report.computed / w2000.report.predicted <= 1.1);
  CHECK_THROWS_AS(weighted_continuous_moment(engine(), 5.0), Error);
}

TEST_CASE("discrete moment") {
  const auto m = main_term_theorem(gammas());
  const ZeroSet zeros = scan_zeros(engine(), 1000.0);
  const auto r100 = discrete_moment(zeros, m, 100.0);
  CHECK(r100.zero_count == 29);
  double direct = 0.0;
  for (const auto& z : zeros.zeros) {
    if (z.gamma > 100.0) break;
    direct += std::norm(engine().zeta(Complex(0.5, z.gamma), 1).value);
  }
  CHECK(r100.computed == Approx(direct).epsilon(1e-6));
  ZeroSet empty;
  empty.t_max = 14.0;
  CHECK(discrete_moment(empty, m).computed == 0.0);
  double prev = 0.0;
  for (double t = 20.0; t <= 1000.0; t += 20.0) {
    const double v = discrete_moment(zeros, m, t).computed;
    CHECK(v >= prev);
    prev = v;
  }
  for (const auto& z : zeros.zeros) {
    const double zeta_sq = std::norm(engine().zeta(Complex(0.5, z.gamma), 1).value);
    CHECK(std::abs(z.z_prime * z.z_prime - zeta_sq) <= 1e-6 * zeta_sq);
  }
  CHECK_THROWS_AS(discrete_moment(zeros, m, 2000.0), Error);
}

TEST_CASE("c-block fit") {
  const auto m = main_term_theorem(gammas());
  const ZeroSet zeros = scan_zeros(engine(), 1000.0);
  const auto c = compare(engine(), zeros, {400.0, 600.0, 800.0, 1000.0});
  REQUIRE(c.fit.fitted.size() == 4);
  CHECK(c.fit.fitted[3] == c.fit.residue[3]);
  for (double v : c.fit.fitted) CHECK(std::isfinite(v));
  CHECK_THROWS_AS(fit_c_block({c.reports[0]}, m), Error);
}
