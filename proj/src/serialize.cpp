#include "zmoment/serialize.hpp"

#include "zmoment/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace zmoment {

using nlohmann::json;

json to_json(const MomentReport& r) {
  json j;
  j["kind"] = r.kind;
  j["t_max"] = r.t_max;
  j["computed"] = r.computed;
  j["predicted"] = r.predicted;
  j["residual"] = r.residual;
  j["envelope"] = r.envelope;
  j["residual_over_envelope"] = r.residual_over_envelope;
  json parts = json::object();
  for (const auto& p : r.parts) parts[p.name] = p.value;
  j["parts"] = parts;
  if (r.zero_count >= 0) {
    j["zero_count"] = r.zero_count;
    j["flagged_zeros"] = r.flagged;
  }
  return j;
}

json to_json(const MainTermPolynomial& p) {
  return {{"label", p.label},
          {"variable", "x = log(T/2pi)"},
          {"normalization", p.normalization},
          {"coeffs", p.coeffs}};
}

json to_json(const TheoremMainTerm& m) {
  return {{"b_block", to_json(m.b_block)},
          {"c_block", to_json(m.c_block)},
          {"total", to_json(m.total)},
          {"gonek_leading", to_json(m.leading)},
          {"generating_signs", m.generating_signs}};
}

json to_json(const Comparison& c) {
  json reports = json::array();
  json summary = json::array();
  for (const auto& r : c.reports) {
    reports.push_back(to_json(r));
    double b = 0.0, cc = 0.0, lead = 0.0;
    for (const auto& p : r.parts) {
      if (p.name == "b_block") b = p.value;
      if (p.name == "c_block") cc = p.value;
      if (p.name == "gonek_leading") lead = p.value;
    }
    summary.push_back({{"t_max", r.t_max},
                       {"computed", r.computed},
                       {"predicted_b_block", b},
                       {"predicted_c_block", cc},
                       {"predicted", r.predicted},
                       {"gonek_leading", lead},
                       {"ratio", r.computed / r.predicted},
                       {"ratio_gonek_leading", r.computed / lead},
                       {"residual", r.residual},
                       {"residual_over_envelope", r.residual_over_envelope}});
  }
  json j{{"reports", reports}, {"summary", summary}, {"main_term", to_json(c.main_term)},
         {"zero_count", c.zero_count}};
  if (!c.fit.fitted.empty()) j["c_coefficients"] = {{"residue", c.fit.residue}, {"fitted", c.fit.fitted}};
  return j;
}

json to_json(const WeightedMoment& w) {
  json j = to_json(w.report);
  j["by_parts"] = w.by_parts;
  j["by_parts_relative_residual"] = w.by_parts_relative_residual;
  return j;
}

json to_json(const GonekCheck& g) {
  return {{"sum_side", g.sum_side},
          {"integral_side", {{"re", g.integral_side.real()}, {"im", g.integral_side.imag()}}},
          {"residual", g.residual},
          {"envelope", g.envelope}};
}

json zeros_json(const ZeroSet& z) {
  json rows = json::array();
  for (const auto& r : z.zeros) {
    rows.push_back({{"gamma", r.gamma},
                    {"z_prime", r.z_prime},
                    {"bracket_lo", r.bracket_lo},
                    {"bracket_hi", r.bracket_hi},
                    {"refine_iters", r.refine_iters},
                    {"flagged", r.flagged}});
  }
  return {{"t_max", z.t_max},
          {"count", z.zeros.size()},
          {"count_expected", z.count_expected},
          {"s_of_t", z.s_of_t},
          {"count_reconciled", z.count_reconciled},
          {"reconciled", z.reconciled()},
          {"flagged", z.flagged},
          {"zeros", rows}};
}

json constants_json(int order) {
  if (order < 0 || order > 8) {
    throw Error(ErrorCode::invalid_argument, "laurent_constants", "constants", "order must lie in [0, 8]");
  }
  const int h_max = std::max(order, 6);
  const StieltjesTable table = stieltjes(h_max);
  json gammas = json::array(), errs = json::array();
  for (int h = 0; h <= order; ++h) {
    gammas.push_back(table[h]);
    errs.push_back(table.est_err[static_cast<std::size_t>(h)]);
  }
  const auto eta = eta_coeffs(table, std::min(order, h_max - 1));
  const LaurentSeries f = generating_series(GeneratingFunction::log_deriv_times_dzeta_sq, table);
  std::vector<double> pole;
  for (int j = f.pole_order(); j >= 1; --j) pole.push_back(f.coeff(-j));
  const auto check = check_printed_residue(table);
  json blocks = json::array();
  for (std::size_t i = 0; i < check.block_matches.size(); ++i) {
    blocks.push_back({{"power", -5 + static_cast<int>(i)},
                      {"printed", check.printed_pole_coeffs[i]},
                      {"computed", check.computed_pole_coeffs[i]},
                      {"matches", static_cast<bool>(check.block_matches[i])}});
  }
  return {{"order", order},
          {"stieltjes", gammas},
          {"stieltjes_est_err", errs},
          {"eta", eta},
          {"residue_log_deriv_times_dzeta_sq",
           {{"pole_coeffs", pole},
            {"log_coeffs", residue_main_term(f, 2.0).log_coeffs},
            {"form", "x * sum_i log_coeffs[i] (log x)^i"}}},
          {"printed_residue_check", blocks}};
}

json asymptotics_json(const TheoremMainTerm& m, const StieltjesTable& gammas, double t_max) {
  json j = to_json(m);
  const double x = std::log(t_max / (2.0 * std::numbers::pi));
  j["hall_p1"] = to_json(hall_poly(0, gammas));
  j["hall_p3"] = to_json(hall_poly(1, gammas));
  j["t_max"] = t_max;
  j["values"] = {{"b_block", m.b_block.value(t_max)},
                 {"c_block", m.c_block.value(t_max)},
                 {"total", m.total.value(t_max)},
                 {"gonek_leading", m.leading.value(t_max)},
                 {"hall_k0", t_max * hall_poly(0, gammas).polynomial(x)},
                 {"hall_k1", t_max / 12.0 * hall_poly(1, gammas).polynomial(x)}};
  return j;
}

std::string report_csv_header() {
  return "kind,t_max,computed,predicted,residual,envelope,residual_over_envelope\n";
}

std::string to_csv_row(const MomentReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.kind.c_str(), r.t_max,
                r.computed, r.predicted, r.residual, r.envelope, r.residual_over_envelope);
  return buf;
}

}  // namespace zmoment
