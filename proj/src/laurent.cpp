#include "zmoment/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "zmoment/error.hpp"
#include "zmoment/special_fn.hpp"

namespace zmoment {
namespace {

[[noreturn]] void series_error(const char* op, const std::string& why) {
  throw Error(ErrorCode::series, "laurent_constants", op, why);
}

double abs_sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double c : v) s += std::abs(c);
  return s;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

StieltjesTable stieltjes(int h_max, int max_series_terms) {
  if (h_max < 0 || h_max > 8) {
    throw Error(ErrorCode::invalid_argument, "laurent_constants", "stieltjes",
                "h_max must lie in [0, 8], got " + std::to_string(h_max));
  }
  // gamma_h = sum_{k<N} f(k) - log^{h+1}N/(h+1) + f(N)/2
  //           - sum_j B_2j/(2j)! f^{(2j-1)}(N),   f(x) = log^h x / x.
  constexpr int kN = 30;
  const double n = kN;
  const double ln = std::log(n);
  const auto& bern = bernoulli_even();
  const int terms = std::min<int>(max_series_terms, static_cast<int>(bern.size()));

  StieltjesTable table;
  for (int h = 0; h <= h_max; ++h) {
    double sum = 0.0, scale = 0.0;
    for (int k = 1; k < kN; ++k) {
      const double lk = std::log(static_cast<double>(k));
      const double term = std::pow(lk, h) / k;
      sum += term;
      scale += std::abs(term);
    }
    const double integral = std::pow(ln, h + 1) / (h + 1);
    const double half_end = 0.5 * std::pow(ln, h) / n;
    scale += integral;
    double value = sum - integral + half_end;

    // a[i] holds the coefficient of log^i x in x^{m+1} f^{(m)}(x).
    std::vector<double> a(static_cast<std::size_t>(h) + 1, 0.0);
    a[static_cast<std::size_t>(h)] = 1.0;
    int m = 0;
    auto differentiate = [&]() {
      std::vector<double> next(a.size(), 0.0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        next[i] -= (m + 1) * a[i];
        if (i > 0) next[i - 1] += static_cast<double>(i) * a[i];
      }
      a = std::move(next);
      ++m;
    };
    auto eval_derivative = [&]() {
      double p = 0.0;
      for (std::size_t i = a.size(); i-- > 0;) p = p * ln + a[i];
      return p * std::pow(n, -(m + 1));
    };
    double last = 0.0;
    double fact = 1.0;  // (2j)!
    for (int j = 1; j <= terms; ++j) {
      differentiate();  // to order 2j - 1
      fact *= (2.0 * j - 1.0) * (2.0 * j);
      const double term = bern[static_cast<std::size_t>(j - 1)] / fact * eval_derivative();
      value -= term;
      last = std::abs(term);
      differentiate();  // to order 2j
      if (last < 1e-18) break;
    }
    const double err = last + 8.0 * std::numeric_limits<double>::epsilon() * scale;
    if (err > 1e-10) {
      throw Error(ErrorCode::accuracy, "laurent_constants", "stieltjes",
                  "gamma_" + std::to_string(h) + " error estimate " +
                      std::to_string(err) + " exceeds 1e-10");
    }
    table.values.push_back(value);
    table.est_err.push_back(err);
  }
  return table;
}

LaurentSeries::LaurentSeries(int pole_order, std::vector<double> coeffs, double est_err)
    : pole_order_(pole_order), coeffs_(std::move(coeffs)), est_err_(est_err) {
  if (pole_order_ < 0) series_error("LaurentSeries", "pole order must be non-negative");
  if (coeffs_.empty()) series_error("LaurentSeries", "a series needs at least one coefficient");
}

LaurentSeries LaurentSeries::constant(double c, int trunc_order) {
  std::vector<double> v(static_cast<std::size_t>(trunc_order) + 1, 0.0);
  v[0] = c;
  return LaurentSeries(0, std::move(v));
}

double LaurentSeries::coeff(int power) const {
  if (power < -pole_order_) return 0.0;
  if (power > trunc_order()) {
    series_error("coeff", "u^" + std::to_string(power) + " lies beyond truncation order " +
                              std::to_string(trunc_order()));
  }
  return coeffs_[idx(power)];
}

double LaurentSeries::operator()(double u) const { return evaluate<double>(u); }

LaurentSeries LaurentSeries::derivative() const {
  const int k_new = trunc_order() - 1;
  const int p_new = pole_order_ > 0 ? pole_order_ + 1 : 0;
  if (k_new < -p_new) series_error("derivative", "no valid coefficients remain");
  std::vector<double> out;
  for (int k = -p_new; k <= k_new; ++k) {
    const int src = k + 1;
    out.push_back(src == 0 ? 0.0 : src * coeff(src));
  }
  return LaurentSeries(p_new, std::move(out), est_err_ * std::max(1, trunc_order()));
}

LaurentSeries LaurentSeries::scaled(double factor) const {
  std::vector<double> out = coeffs_;
  for (double& c : out) c *= factor;
  return LaurentSeries(pole_order_, std::move(out), est_err_ * std::abs(factor));
}

LaurentSeries LaurentSeries::trimmed(double threshold) const {
  int p = pole_order_;
  std::size_t skip = 0;
  while (p > 0 && skip + 1 < coeffs_.size() && std::abs(coeffs_[skip]) <= threshold) {
    ++skip;
    --p;
  }
  return LaurentSeries(p, std::vector<double>(coeffs_.begin() + static_cast<long>(skip), coeffs_.end()),
                       est_err_);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int p = std::max(a.pole_order(), b.pole_order());
  const int k = std::min(a.trunc_order(), b.trunc_order());
  if (k < -p) series_error("add", "operands share no valid coefficients");
  std::vector<double> out;
  for (int i = -p; i <= k; ++i) out.push_back(a.coeff(i) + b.coeff(i));
  return LaurentSeries(p, std::move(out), a.est_err() + b.est_err());
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + b.scaled(-1.0);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int pa = a.pole_order(), pb = b.pole_order();
  const int p = pa + pb;
  const int k = std::min(a.trunc_order() - pb, b.trunc_order() - pa);
  if (k < -p) series_error("mul", "product has no valid coefficients (insufficient truncation)");
  std::vector<double> out;
  for (int n = -p; n <= k; ++n) {
    double s = 0.0;
    for (int i = -pa; i <= a.trunc_order(); ++i) {
      const int j = n - i;
      if (j < -pb || j > b.trunc_order()) continue;
      s += a.coeff(i) * b.coeff(j);
    }
    out.push_back(s);
  }
  const double err = a.est_err() * abs_sum(b.coeffs()) + b.est_err() * abs_sum(a.coeffs());
  return LaurentSeries(p, std::move(out), err);
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  const int pa = a.pole_order(), pb = b.pole_order();
  const double lead = b.coeffs().front();
  if (lead == 0.0) series_error("div", "division by a series with zero leading coefficient");
  // Normalised power series A(u) = u^pa a(u), B(u) = u^pb b(u).
  const int da = a.trunc_order() + pa;
  const int db = b.trunc_order() + pb;
  const int d = std::min(da, db);
  std::vector<double> q(static_cast<std::size_t>(d) + 1, 0.0);
  for (int i = 0; i <= d; ++i) {
    double s = a.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 1; j <= i; ++j)
      s -= b.coeffs()[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(i - j)];
    q[static_cast<std::size_t>(i)] = s / lead;
  }
  const double qmax = std::abs(*std::max_element(q.begin(), q.end(), [](double x, double y) {
    return std::abs(x) < std::abs(y);
  }));
  const double err = (a.est_err() + b.est_err() * qmax * static_cast<double>(q.size())) *
                     (abs_sum(b.coeffs()) / std::abs(lead)) / std::abs(lead);
  if (pa >= pb) return LaurentSeries(pa - pb, std::move(q), err);
  std::vector<double> out(static_cast<std::size_t>(pb - pa), 0.0);
  out.insert(out.end(), q.begin(), q.end());
  return LaurentSeries(0, std::move(out), err);
}

LaurentSeries series_op(const LaurentSeries& a, const LaurentSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::div: return a / b;
    case SeriesOp::derivative: return a.derivative();
  }
  series_error("series_op", "unknown operation");
}

LaurentSeries series_zeta(const StieltjesTable& gammas, int trunc) {
  if (trunc < 0 || trunc > gammas.h_max()) {
    throw Error(ErrorCode::invalid_argument, "laurent_constants", "series_zeta",
                "trunc must lie in [0, " + std::to_string(gammas.h_max()) + "]");
  }
  std::vector<double> c{1.0};
  double err = 0.0;
  for (int h = 0; h <= trunc; ++h) {
    const double sign = (h % 2 == 0) ? 1.0 : -1.0;
    const double f = factorial(h);
    c.push_back(sign * gammas[h] / f);
    err = std::max(err, gammas.est_err[static_cast<std::size_t>(h)] / f);
  }
  return LaurentSeries(1, std::move(c), err);
}

std::vector<double> eta_coeffs(const StieltjesTable& gammas, int k_max) {
  const int trunc = gammas.h_max();
  if (k_max < 0 || k_max > trunc - 1) {
    throw Error(ErrorCode::invalid_argument, "laurent_constants", "eta_coeffs",
                "k_max must lie in [0, " + std::to_string(trunc - 1) + "]");
  }
  const LaurentSeries z = series_zeta(gammas, trunc);
  const LaurentSeries ld = z.derivative() / z;
  std::vector<double> out;
  for (int k = 0; k <= k_max; ++k) out.push_back(ld.coeff(k));
  return out;
}

ResidueTerm residue_main_term(const LaurentSeries& f, double x) {
  if (!(x > 1.0)) {
    throw Error(ErrorCode::invalid_argument, "laurent_constants", "residue_main_term",
                "x must exceed 1");
  }
  const int p = f.pole_order();
  if (f.trunc_order() < -1 && p >= 1) {
    throw Error(ErrorCode::series, "laurent_constants", "residue_main_term",
                "insufficient truncation: the u^-1 coefficient is not available");
  }
  ResidueTerm r;
  r.log_coeffs.assign(static_cast<std::size_t>(std::max(p, 1)), 0.0);
  // x^s/s = x e^{uL}/(1+u); [u^m] = sum_{i<=m} (-1)^{m-i} L^i / i!.
  for (int j = 1; j <= p; ++j) {
    const double c = f.coeff(-j);
    const int m = j - 1;
    for (int i = 0; i <= m; ++i) {
      const double sign = ((m - i) % 2 == 0) ? 1.0 : -1.0;
      r.log_coeffs[static_cast<std::size_t>(i)] += c * sign / factorial(i);
    }
  }
  const double lx = std::log(x);
  double poly = 0.0;
  for (std::size_t i = r.log_coeffs.size(); i-- > 0;) poly = poly * lx + r.log_coeffs[i];
  r.value = x * poly;
  return r;
}

LaurentSeries generating_series(GeneratingFunction g, const StieltjesTable& gammas) {
  const LaurentSeries z = series_zeta(gammas, gammas.h_max());
  const LaurentSeries dz = z.derivative();
  switch (g) {
    case GeneratingFunction::log_deriv_times_dzeta_sq: return (dz / z) * (dz * dz);
    case GeneratingFunction::dzeta_sq_derivative: return (dz * dz).derivative();
    case GeneratingFunction::zeta_dzeta_second_deriv: return (z * dz).derivative().derivative();
  }
  series_error("generating_series", "unknown generating function");
}

std::string to_string(GeneratingFunction g) {
  switch (g) {
    case GeneratingFunction::log_deriv_times_dzeta_sq: return "log_deriv_times_dzeta_sq";
    case GeneratingFunction::dzeta_sq_derivative: return "dzeta_sq_derivative";
    case GeneratingFunction::zeta_dzeta_second_deriv: return "zeta_dzeta_second_deriv";
  }
  return "unknown";
}

bool PrintedResidueCheck::all_match() const {
  return std::all_of(block_matches.begin(), block_matches.end(), [](bool b) { return b; });
}

PrintedResidueCheck check_printed_residue(const StieltjesTable& gammas, double tol) {
  if (gammas.h_max() < 4) {
    throw Error(ErrorCode::invalid_argument, "laurent_constants", "check_printed_residue",
                "needs gamma_0 .. gamma_4");
  }
  const auto eta = eta_coeffs(gammas, 3);
  const double g1 = gammas[1], g2 = gammas[2], g3 = gammas[3];
  PrintedResidueCheck out;
  // Each printed block is coef * x * (j-1)! [u^{j-1}](e^{uL}/(1+u)), so the
  // implied Laurent coefficient is coef * (j-1)! / (normalising factorial).
  out.printed_pole_coeffs = {
      -1.0,                                          // -(1/4!) (L^4 - 4L^3 + ...)
      eta[0],                                        // (eta_0/3!) (L^3 - ...)
      2.0 * (g1 + eta[1] / 2.0),                     // (gamma_1 + eta_1/2)(L^2 - 2L + 2)
      eta[2] + 4.0 * g2 - 2.0 * g1 * eta[0],         // (...)(L - 1)
      eta[3] + 6.0 * g3 - g1 * g1 - 2.0 * eta[1] * g1,
  };
  const LaurentSeries f = generating_series(GeneratingFunction::log_deriv_times_dzeta_sq, gammas);
  for (int j = 5; j >= 1; --j) out.computed_pole_coeffs.push_back(f.coeff(-j));
  for (std::size_t i = 0; i < 5; ++i) {
    const double a = out.printed_pole_coeffs[i], b = out.computed_pole_coeffs[i];
    out.block_matches.push_back(std::abs(a - b) <= tol * std::max(1.0, std::abs(b)));
  }
  std::vector<double> printed(5, 0.0);
  for (int j = 5; j >= 1; --j) {
    const int m = j - 1;
    const double c = out.printed_pole_coeffs[static_cast<std::size_t>(5 - j)];
    for (int i = 0; i <= m; ++i) {
      const double sign = ((m - i) % 2 == 0) ? 1.0 : -1.0;
      printed[static_cast<std::size_t>(i)] += c * sign / factorial(i);
    }
  }
  out.printed_log_coeffs = printed;
  out.computed_log_coeffs = residue_main_term(f, 2.0).log_coeffs;
  return out;
}

}  // namespace zmoment
