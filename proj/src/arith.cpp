#include "zmoment/arith.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include "zmoment/error.hpp"
#include "zmoment/parallel.hpp"
#include "zmoment/quadrature.hpp"

namespace zmoment {
namespace {

[[noreturn]] void table_error(const char* operation, const std::string& reason) {
  throw Error(ErrorCode::table, "arithmetic_sums", operation, reason);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> lo, hi;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d * d != n) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

}  // namespace

CoeffTable CoeffTable::build(std::int64_t n_max) {
  if (n_max < 1 || n_max > kMaxTableSize) {
    table_error("build_tables", "n_max must lie in [1, 1e7]");
  }
  CoeffTable t;
  t.n_max_ = n_max;
  const auto size = static_cast<std::size_t>(n_max + 1);
  t.lambda_.assign(size, 0.0);
  t.dd_.assign(size, 0.0);
  t.tau_.assign(size, 0);

  std::vector<bool> composite(size, false);
  for (std::int64_t p = 2; p <= n_max; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (std::int64_t q = p * p; q <= n_max; q += p) composite[static_cast<std::size_t>(q)] = true;
    const double lp = std::log(static_cast<double>(p));
    for (std::int64_t q = p; q <= n_max; q *= p) {
      t.lambda_[static_cast<std::size_t>(q)] = lp;
      if (q > n_max / p) break;
    }
  }

  std::vector<double> logs(size, 0.0);
  for (std::int64_t n = 1; n <= n_max; ++n) logs[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));
  for (std::int64_t d = 1; d <= n_max; ++d) {
    for (std::int64_t m = d; m <= n_max; m += d) ++t.tau_[static_cast<std::size_t>(m)];
  }
  // D(n) = sum over ordered factorisations n = d e of log d log e.
  for (std::int64_t d = 2; d * d <= n_max; ++d) {
    const double ld = logs[static_cast<std::size_t>(d)];
    t.dd_[static_cast<std::size_t>(d * d)] += ld * ld;
    for (std::int64_t e = d + 1; e <= n_max / d; ++e) {
      t.dd_[static_cast<std::size_t>(d * e)] += 2.0 * ld * logs[static_cast<std::size_t>(e)];
    }
  }
  t.dd_prefix_.assign(size, 0.0);
  CompensatedSum acc;
  for (std::size_t n = 1; n < size; ++n) {
    acc.add(t.dd_[n]);
    t.dd_prefix_[n] = acc.value();
  }
  return t;
}

double CoeffTable::one_star_log(std::int64_t n) const {
  // sum_{d|n} log d = (tau(n)/2) log n.
  return 0.5 * static_cast<double>(tau_.at(static_cast<std::size_t>(n))) *
         std::log(static_cast<double>(n));
}

double CoeffTable::lambda_star_d(std::int64_t n) const {
  double s = 0.0;
  for (std::int64_t d : divisors(n)) s += lambda(d) * dd(n / d);
  return s;
}

double CoeffTable::coeff(CoeffKind kind, std::int64_t n) const {
  switch (kind) {
    case CoeffKind::lambda_star_d: return lambda_star_d(n);
    case CoeffKind::d: return dd(n);
    case CoeffKind::one_star_log: return one_star_log(n);
  }
  return 0.0;
}

std::int64_t CoeffTable::check_x(double x, const char* operation) const {
  if (!std::isfinite(x)) table_error(operation, "x must be finite");
  if (x < 1.0) return 0;
  if (x >= static_cast<double>(n_max_) + 1.0) {
    table_error(operation, "x exceeds the table size " + std::to_string(n_max_));
  }
  return static_cast<std::int64_t>(std::floor(x));
}

double CoeffTable::chebyshev_psi(double x) const {
  const std::int64_t n = check_x(x, "chebyshev_psi");
  CompensatedSum s;
  for (std::int64_t k = 2; k <= n; ++k) s.add(lambda(k));
  return s.value();
}

double CoeffTable::conv_sum_ld(double x) const {
  const std::int64_t n = check_x(x, "conv_sum_LD");
  CompensatedSum s;
  for (std::int64_t m = 2; m <= n; ++m) {
    const double l = lambda_[static_cast<std::size_t>(m)];
    if (l == 0.0) continue;
    s.add(l * dd_prefix_[static_cast<std::size_t>(n / m)]);
  }
  return s.value();
}

double CoeffTable::weighted_sum(double x, WeightedKind kind) const {
  const std::int64_t n = check_x(x, "weighted_sums");
  CompensatedSum s;
  for (std::int64_t k = 2; k <= n; ++k) {
    const double lk = std::log(static_cast<double>(k));
    if (kind == WeightedKind::d_logn)
      s.add(dd_[static_cast<std::size_t>(k)] * lk);
    else
      s.add(one_star_log(k) * lk * lk);
  }
  return s.value();
}

const std::vector<GeneratingSign>& generating_signs() {
  static std::once_flag once;
  static std::vector<GeneratingSign> signs;
  std::call_once(once, [&] {
    const StieltjesTable gammas = stieltjes(6);
    constexpr double x = 10000.5;
    const CoeffTable table = CoeffTable::build(10001);
    const std::pair<GeneratingFunction, double> cases[] = {
        {GeneratingFunction::log_deriv_times_dzeta_sq, table.conv_sum_ld(x)},
        {GeneratingFunction::dzeta_sq_derivative, table.weighted_sum(x, WeightedKind::d_logn)},
        {GeneratingFunction::zeta_dzeta_second_deriv,
         table.weighted_sum(x, WeightedKind::one_star_log_log2n)},
    };
    for (const auto& [g, sum] : cases) {
      GeneratingSign gs;
      gs.function = g;
      gs.sum_side = sum;
      gs.residue = residue_main_term(generating_series(g, gammas), x).value;
      const double plus = std::abs(sum - gs.residue), minus = std::abs(sum + gs.residue);
      gs.sign = plus <= minus ? 1 : -1;
      gs.relative_error = std::min(plus, minus) / std::abs(sum);
      signs.push_back(gs);
    }
  });
  return signs;
}

GonekCheck gonek_lemma_check(const ZetaEngine& engine, double a, int m, double t_max,
                             CoeffKind kind, unsigned threads) {
  const char* op = "gonek_lemma_check";
  if (!(a > 1.0 && a <= 1.5)) {
    throw Error(ErrorCode::invalid_argument, "arithmetic_sums", op, "a must lie in (1, 1.5]");
  }
  if (m < 0 || m > 2) throw Error(ErrorCode::invalid_argument, "arithmetic_sums", op, "m must be 0, 1 or 2");
  if (!(t_max > 2.0 * std::numbers::pi && t_max <= 2000.0)) {
    throw Error(ErrorCode::invalid_argument, "arithmetic_sums", op, "T must lie in (2pi, 2000]");
  }
  GonekCheck out;
  const double cutoff = t_max / (2.0 * std::numbers::pi);
  const auto n_top = static_cast<std::int64_t>(std::floor(cutoff));
  const CoeffTable table = CoeffTable::build(std::max<std::int64_t>(n_top, 1));
  CompensatedSum sum;
  for (std::int64_t n = 1; n <= n_top; ++n) {
    sum.add(table.coeff(kind, n) * std::pow(std::log(static_cast<double>(n)), m));
  }
  out.sum_side = sum.value();

  auto dirichlet = [&](Complex s) -> Complex {
    const auto z = engine.zeta_derivatives(s, 1);
    switch (kind) {
      case CoeffKind::lambda_star_d: return -z[1] * z[1] * z[1] / z[0];
      case CoeffKind::d: return z[1] * z[1];
      case CoeffKind::one_star_log: return -z[0] * z[1];
    }
    return 0.0;
  };
  auto integrand = [&](double t) -> std::complex<double> {
    const Complex f = dirichlet(Complex(a, t));
    const Complex c = chi(Complex(1.0 - a, -t));
    return f * c * std::pow(std::log(t / (2.0 * std::numbers::pi)), m);
  };
  constexpr double kPanel = 0.5;
  const auto n_panels = static_cast<std::size_t>(std::ceil((t_max - 1.0) / kPanel));
  std::vector<std::complex<double>> parts(n_panels);
  parallel_for(n_panels, threads, [&](std::size_t i) {
    const double lo = 1.0 + kPanel * static_cast<double>(i);
    const double hi = std::min(t_max, lo + kPanel);
    // |chi(1-a-it)| grows like (t/2pi)^{a-1/2}; the tolerance follows it.
    const double tol = 1e-9 * (hi - lo) * (1.0 + std::pow(hi, a - 0.5));
    parts[i] = quad::adaptive<std::complex<double>>(integrand, lo, hi, tol).value;
  });
  out.integral_side = pairwise_sum(std::span<const std::complex<double>>(parts)) / (2.0 * std::numbers::pi);
  out.residual = std::abs(out.integral_side - out.sum_side);
  out.envelope = std::pow(t_max, a - 0.5) * std::pow(std::log(t_max), m);
  return out;
}

}  // namespace zmoment
