#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zmoment/error.hpp"
#include "zmoment/laurent.hpp"

using namespace zmoment;
using doctest::Approx;

namespace {
const StieltjesTable& table() {
  static const StieltjesTable t = stieltjes(6);
  return t;
}

oracle::cplx generating_oracle(GeneratingFunction g, double x) {
  const double lx = std::log(x);
  return oracle::contour([&](oracle::cplx s) -> oracle::cplx {
    const oracle::cplx xs = std::exp(s * lx);
    const oracle::cplx z = oracle::zeta_deriv(s, 0), dz = oracle::zeta_deriv(s, 1);
    switch (g) {
      case GeneratingFunction::log_deriv_times_dzeta_sq: return dz / z * dz * dz * xs / s;
      case GeneratingFunction::dzeta_sq_derivative:
        return 2.0 * dz * oracle::zeta_deriv(s, 2) * xs / s;
      case GeneratingFunction::zeta_dzeta_second_deriv: {
        // Res[(zeta zeta')'' g] = Res[zeta zeta' g''] with g = x^s/s.
        const oracle::cplx g2 = xs * (lx * lx / s - 2.0 * lx / (s * s) + 2.0 / (s * s * s));
        return z * dz * g2;
      }
    }
    return 0.0;
  });
}
}  // namespace

TEST_CASE("Stieltjes constants") {
  CHECK(table()[0] > 0.577215);
  CHECK(table()[0] < 0.577216);
  for (int h = 0; h <= 4; ++h) {
    CHECK(std::abs(table()[h] - oracle::stieltjes_limit(h)) < 1e-10);
  }
  CHECK(table()[1] == Approx(-0.0728158454).epsilon(1e-9));
  CHECK(table()[2] == Approx(-0.0096903632).epsilon(1e-8));
  for (int h = 0; h <= 6; ++h) CHECK(table().est_err[static_cast<std::size_t>(h)] <= 1e-10);
  CHECK_THROWS_AS(stieltjes(9), Error);
  CHECK_THROWS_AS(stieltjes(-1), Error);
}

TEST_CASE("series_zeta coefficients") {
  const LaurentSeries z = series_zeta(table(), 4);
  CHECK(z.pole_order() == 1);
  CHECK(z.trunc_order() == 4);
  CHECK(z.coeff(-1) == 1.0);
  CHECK(z.coeff(0) == table()[0]);
  CHECK(z.coeff(1) == -table()[1]);
  CHECK(z.coeff(2) == Approx(table()[2] / 2.0));
  CHECK_THROWS_AS(z.coeff(5), Error);
  CHECK_THROWS_AS(series_zeta(table(), 7), Error);
}

TEST_CASE("series arithmetic") {
  const LaurentSeries z = series_zeta(table(), 6);
  const LaurentSeries dz = z.derivative();
  CHECK(dz.coeff(-2) == -1.0);
  const LaurentSeries ld = series_op(dz, z, SeriesOp::div);
  CHECK(ld.coeff(-1) == Approx(-1.0));
  CHECK(std::abs(ld.coeff(0) - table()[0]) < 1e-14);
  const LaurentSeries inv = LaurentSeries::constant(1.0, 6) / z;
  const LaurentSeries one = z * inv;
  CHECK(one.coeff(0) == Approx(1.0));
  for (int k = 1; k <= one.trunc_order(); ++k) CHECK(std::abs(one.coeff(k)) < 1e-14);
  // Truncation orders are tracked, not extended.
  CHECK((z * z).trunc_order() == 5);
  CHECK((z + LaurentSeries::constant(1.0, 2)).trunc_order() == 2);
  CHECK_THROWS_AS(z / LaurentSeries(0, {0.0, 0.0}), Error);
}

TEST_CASE("eta coefficients") {
  const auto eta = eta_coeffs(table(), 5);
  CHECK(std::abs(eta[0] - table()[0]) < 1e-10);
  CHECK(std::abs(eta[1] - (-2.0 * table()[1] - table()[0] * table()[0])) < 1e-13);
  CHECK(eta[1] == Approx(-0.18754623284).epsilon(1e-9));
  // (zeta'/zeta) zeta recomposes zeta' up to the truncation order.
  const LaurentSeries z = series_zeta(table(), 6);
  std::vector<double> c{-1.0};
  c.insert(c.end(), eta.begin(), eta.end());
  const LaurentSeries ld(1, c);
  const LaurentSeries re = ld * z;
  const LaurentSeries dz = z.derivative();
  for (int k = -2; k <= re.trunc_order(); ++k) CHECK(std::abs(re.coeff(k) - dz.coeff(k)) < 1e-12);
  CHECK_THROWS_AS(eta_coeffs(table(), 6), Error);
}

TEST_CASE("residue_main_term closed forms") {
  const double x = 37.0, l = std::log(x);
  CHECK(residue_main_term(LaurentSeries(1, {1.0, 0.0}), x).value == Approx(x));
  CHECK(residue_main_term(LaurentSeries(2, {1.0, 0.0, 0.0}), x).value == Approx(x * (l - 1.0)));
  const auto p = residue_main_term(LaurentSeries(5, {-1.0, 0, 0, 0, 0, 0}), x).log_coeffs;
  // -(1/4!)(L^4 - 4L^3 + 12L^2 - 24L + 24)
  const double want[] = {-1.0, 1.0, -0.5, 1.0 / 6.0, -1.0 / 24.0};
  for (int i = 0; i < 5; ++i) CHECK(p[static_cast<std::size_t>(i)] == Approx(want[i]));
  CHECK_THROWS_AS(residue_main_term(LaurentSeries(1, {1.0}), 0.5), Error);
}

TEST_CASE("residues agree with contour integration") {
  for (auto g : {GeneratingFunction::log_deriv_times_dzeta_sq, GeneratingFunction::dzeta_sq_derivative,
                 GeneratingFunction::zeta_dzeta_second_deriv}) {
    const LaurentSeries f = generating_series(g, table());
    for (double x : {10.0, 100.0, 1000.0}) {
      const double series = residue_main_term(f, x).value;
      const oracle::cplx contour = generating_oracle(g, x);
      CAPTURE(to_string(g));
      CAPTURE(x);
      CHECK(std::abs(contour.imag()) < 1e-6 * std::abs(series));
      CHECK(std::abs(series - contour.real()) <= 1e-6 * std::abs(series));
    }
  }
}

TEST_CASE("printed residue blocks versus series arithmetic") {
  const auto check = check_printed_residue(table());
  REQUIRE(check.block_matches.size() == 5);
  // The u^-5 and u^-4 blocks reproduce; the printed u^-3 .. u^-1 blocks do not.
  CHECK(check.block_matches[0]);
  CHECK(check.block_matches[1]);
  CHECK_FALSE(check.block_matches[2]);
  CHECK_FALSE(check.block_matches[3]);
  CHECK_FALSE(check.block_matches[4]);
  CHECK_FALSE(check.all_match());
  CHECK(std::abs(check.printed_log_coeffs[4] - check.computed_log_coeffs[4]) < 1e-10);
  CHECK(std::abs(check.printed_log_coeffs[3] - check.computed_log_coeffs[3]) < 1e-10);
  CHECK(check.computed_pole_coeffs[2] == Approx(-0.0419145).epsilon(1e-5));
  CHECK(check.computed_pole_coeffs[3] == Approx(-0.051753).epsilon(1e-4));
  CHECK(check.computed_pole_coeffs[4] == Approx(0.0163919).epsilon(1e-4));
}
