#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zmoment/error.hpp"
#include "zmoment/zeros.hpp"

using namespace zmoment;
using doctest::Approx;

namespace {
const ZetaEngine& engine() {
  static const ZetaEngine e;
  return e;
}
const ZeroSet& zeros_1000() {
  static const ZeroSet s = scan_zeros(engine(), 1000.0);
  return s;
}
}  // namespace

TEST_CASE("zero census") {
  CHECK(scan_zeros(engine(), 14.0).zeros.empty());
  const ZeroSet s100 = scan_zeros(engine(), 100.0);
  CHECK(s100.zeros.size() == 29);
  CHECK(s100.reconciled());
  CHECK(zeros_1000().zeros.size() == 649);
  CHECK(zeros_1000().reconciled());
  CHECK(zeros_1000().flagged == 0);
}

TEST_CASE("first zeros agree with a bisection oracle") {
  const auto& z = zeros_1000().zeros;
  auto f = [](double t) { return engine().hardy_z(t); };
  CHECK(z[0].gamma == Approx(oracle::bisect(f, 14.0, 14.5)).epsilon(1e-12));
  CHECK(z[1].gamma == Approx(oracle::bisect(f, 20.5, 21.5)).epsilon(1e-12));
  CHECK(z[0].gamma == Approx(14.134725141734693).epsilon(1e-12));
}

TEST_CASE("zero records satisfy their invariants") {
  const auto& z = zeros_1000().zeros;
  for (std::size_t i = 0; i < z.size(); ++i) {
    CHECK(z[i].bracket_hi - z[i].bracket_lo <= 1e-9);
    CHECK(z[i].bracket_lo <= z[i].gamma);
    CHECK(z[i].gamma <= z[i].bracket_hi);
    CHECK(z[i].gamma > 0.0);
    CHECK(z[i].gamma <= 1000.0);
    CHECK(std::abs(engine().hardy_z(z[i].gamma)) <= 1e-8);
    if (z[i].bracket_hi > z[i].bracket_lo) {
      CHECK((engine().hardy_z(z[i].bracket_lo) > 0) != (engine().hardy_z(z[i].bracket_hi) > 0));
    }
    if (i > 0) {
      CHECK(z[i].gamma > z[i - 1].gamma);
      CHECK((z[i].z_prime > 0) != (z[i - 1].z_prime > 0));
    }
  }
}

TEST_CASE("count_expected") {
  CHECK(count_expected(100.0) == Approx(29.0024).epsilon(1e-4));
  const double t = 2.0 * oracle::pi * std::exp(1.0);
  CHECK(count_expected(t) == Approx(1.0 + riemann_siegel_theta(t) / oracle::pi));
  for (double t1 = 18.0; t1 < 2000.0; t1 *= 1.3) CHECK(count_expected(t1 * 1.01) > count_expected(t1));
  CHECK_THROWS_AS(count_expected(5.0), Error);
}

TEST_CASE("S(T) reconciliation") {
  CHECK(count_zeros_exact(engine(), 100.0) == 29);
  CHECK(count_zeros_exact(engine(), 1000.0) == 649);
  CHECK(std::abs(s_function(engine(), 100.0)) < 1.0);
}

TEST_CASE("scans do not depend on grid offset or thread count") {
  ScanOptions a, b;
  a.threads = 1;
  b.threads = 4;
  b.grid_offset = 0.37;
  const ZeroSet x = scan_zeros(engine(), 300.0, a);
  const ZeroSet y = scan_zeros(engine(), 300.0, b);
  REQUIRE(x.zeros.size() == y.zeros.size());
  for (std::size_t i = 0; i < x.zeros.size(); ++i) CHECK(std::abs(x.zeros[i].gamma - y.zeros[i].gamma) <= 1e-9);
  const ZeroSet z = scan_zeros(engine(), 300.0, b);
  for (std::size_t i = 0; i < x.zeros.size(); ++i) CHECK(z.zeros[i].gamma == y.zeros[i].gamma);
}

TEST_CASE("scan preconditions") {
  CHECK_THROWS_AS(scan_zeros(engine(), 5.0), Error);
  CHECK_THROWS_AS(scan_zeros(engine(), 2e5), Error);
  ScanOptions bad;
  bad.grid_offset = 1.5;
  CHECK_THROWS_AS(scan_zeros(engine(), 50.0, bad), Error);
}

TEST_CASE("CSV round trip") {
  const ZeroSet s = scan_zeros(engine(), 100.0);
  const std::string csv = zeros_to_csv(s, true);
  const ZeroSet back = zeros_from_csv(csv);
  REQUIRE(back.zeros.size() == s.zeros.size());
  for (std::size_t i = 0; i < s.zeros.size(); ++i) {
    CHECK(back.zeros[i].gamma == s.zeros[i].gamma);
    CHECK(back.zeros[i].z_prime == s.zeros[i].z_prime);
    CHECK(back.zeros[i].bracket_lo == s.zeros[i].bracket_lo);
    CHECK(back.zeros[i].bracket_hi == s.zeros[i].bracket_hi);
  }
  CHECK(back.count_reconciled == s.count_reconciled);
  CHECK(back.t_max == s.t_max);
  const std::string plain = zeros_to_csv(s);
  CHECK(plain.rfind("gamma,z_prime,bracket_lo,bracket_hi\n", 0) == 0);
  CHECK_THROWS_AS(zeros_from_csv("nonsense\n1,2,3,4\n"), Error);
}
