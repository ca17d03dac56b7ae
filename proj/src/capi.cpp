#include "zmoment/zmoment.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <numbers>
#include <string>

#include "zmoment/arith.hpp"
#include "zmoment/error.hpp"
#include "zmoment/moments.hpp"
#include "zmoment/serialize.hpp"
#include "zmoment/zeros.hpp"

using namespace zmoment;

struct zm_context {
  PrecisionConfig precision;
  std::unique_ptr<ZetaEngine> engine;
  unsigned threads = 1;
};

struct zm_zero_set {
  ZeroSet set;
};

struct zm_coeff_table {
  CoeffTable table;
};

struct zm_report {
  MomentReport report;
  nlohmann::json json;
};

namespace {

struct LastError {
  std::string message;
  std::string module;
  std::string operation;
};

thread_local LastError last_error;

zm_status set_error(zm_status status, std::string module, std::string operation, std::string message) {
  last_error = {std::move(message), std::move(module), std::move(operation)};
  return status;
}

template <class Fn>
zm_status guard(const char* operation, Fn&& fn) {
  try {
    fn();
    last_error = {};
    return ZM_OK;
  } catch (const Error& e) {
    return set_error(static_cast<zm_status>(e.code()), e.module(), e.operation(), e.reason());
  } catch (const std::bad_alloc&) {
    return set_error(ZM_ERR_TABLE, "capi", operation, "out of memory");
  } catch (const std::exception& e) {
    return set_error(ZM_ERR_INTERNAL, "capi", operation, e.what());
  }
}

zm_status null_arg(const char* operation) {
  return set_error(ZM_ERR_INVALID_ARGUMENT, "capi", operation, "null pointer argument");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Complex to_cpp(zm_complex z) { return {z.re, z.im}; }
zm_complex to_c(Complex z) { return {z.real(), z.imag()}; }

const StieltjesTable& default_table() {
  static const StieltjesTable table = stieltjes(6);
  return table;
}

zm_zero to_c(const ZeroRecord& r) {
  return {r.gamma, r.z_prime, r.bracket_lo, r.bracket_hi, r.refine_iters, r.flagged ? 1 : 0};
}

}  // namespace

extern "C" {

const char* zm_version(void) { return ZMOMENT_VERSION_STRING; }

const char* zm_status_string(zm_status status) {
  switch (status) {
    case ZM_OK: return "ok";
    case ZM_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ZM_ERR_CONFIG: return "config";
    case ZM_ERR_DOMAIN: return "domain";
    case ZM_ERR_POLE: return "pole";
    case ZM_ERR_OVERFLOW: return "overflow";
    case ZM_ERR_ENVELOPE: return "envelope";
    case ZM_ERR_ACCURACY: return "accuracy";
    case ZM_ERR_QUADRATURE: return "quadrature";
    case ZM_ERR_COUNT_MISMATCH: return "count_mismatch";
    case ZM_ERR_SERIES: return "series";
    case ZM_ERR_TABLE: return "table";
    case ZM_ERR_IO: return "io";
    case ZM_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* zm_last_error_message(void) { return last_error.message.c_str(); }
const char* zm_last_error_module(void) { return last_error.module.c_str(); }
const char* zm_last_error_operation(void) { return last_error.operation.c_str(); }
void zm_string_free(char* s) { std::free(s); }

void zm_precision_default(zm_precision* out) {
  if (!out) return;
  const PrecisionConfig d;
  *out = {d.target_abs_tol, d.target_rel_tol, d.max_series_terms};
}

zm_status zm_context_create(const zm_precision* precision, zm_context** out) {
  if (!out) return null_arg("context_create");
  return guard("context_create", [&] {
    auto ctx = std::make_unique<zm_context>();
    if (precision) {
      ctx->precision = {precision->abs_tol, precision->rel_tol, precision->max_series_terms};
    }
    ctx->precision.validate();
    ctx->engine = std::make_unique<ZetaEngine>(ctx->precision);
    *out = ctx.release();
  });
}

void zm_context_destroy(zm_context* ctx) { delete ctx; }

zm_status zm_context_set_threads(zm_context* ctx, unsigned threads) {
  if (!ctx) return null_arg("context_set_threads");
  if (threads == 0 || threads > 1024) {
    return set_error(ZM_ERR_CONFIG, "capi", "context_set_threads", "threads must lie in [1, 1024]");
  }
  ctx->threads = threads;
  return ZM_OK;
}

zm_status zm_context_precision(const zm_context* ctx, zm_precision* out) {
  if (!ctx || !out) return null_arg("context_precision");
  *out = {ctx->precision.target_abs_tol, ctx->precision.target_rel_tol, ctx->precision.max_series_terms};
  return ZM_OK;
}

uint64_t zm_context_precision_hash(const zm_context* ctx) { return ctx ? ctx->precision.hash() : 0; }

zm_status zm_log_gamma(zm_complex s, zm_complex* out) {
  if (!out) return null_arg("log_gamma");
  return guard("log_gamma", [&] { *out = to_c(log_gamma(to_cpp(s))); });
}

zm_status zm_chi(zm_complex s, zm_complex* out) {
  if (!out) return null_arg("chi");
  return guard("chi", [&] { *out = to_c(chi(to_cpp(s))); });
}

zm_status zm_omega(zm_complex s, zm_complex* out) {
  if (!out) return null_arg("omega");
  return guard("omega", [&] { *out = to_c(omega(to_cpp(s))); });
}

zm_status zm_theta(double t, double* out) {
  if (!out) return null_arg("riemann_siegel_theta");
  return guard("riemann_siegel_theta", [&] { *out = riemann_siegel_theta(t); });
}

zm_status zm_theta_prime(double t, double* out) {
  if (!out) return null_arg("riemann_siegel_theta_prime");
  return guard("riemann_siegel_theta_prime", [&] { *out = riemann_siegel_theta_prime(t); });
}

zm_status zm_zeta(const zm_context* ctx, zm_complex s, int order, zm_complex* value, double* est_abs_err) {
  if (!ctx || !value) return null_arg("zeta");
  return guard("zeta", [&] {
    const auto r = ctx->engine->zeta(to_cpp(s), order);
    *value = to_c(r.value);
    if (est_abs_err) *est_abs_err = r.est_abs_err;
  });
}

zm_status zm_hardy_z(const zm_context* ctx, double t, double* out) {
  if (!ctx || !out) return null_arg("hardy_z");
  return guard("hardy_z", [&] { *out = ctx->engine->hardy_z(t); });
}

zm_status zm_hardy_z_prime(const zm_context* ctx, double t, double* out) {
  if (!ctx || !out) return null_arg("hardy_z_prime");
  return guard("hardy_z_prime", [&] { *out = ctx->engine->hardy_z_prime(t); });
}

zm_status zm_z1(const zm_context* ctx, zm_complex s, zm_complex* out) {
  if (!ctx || !out) return null_arg("z1");
  return guard("z1", [&] { *out = to_c(ctx->engine->z1(to_cpp(s)).value); });
}

zm_status zm_count_expected(double t, double* out) {
  if (!out) return null_arg("count_expected");
  return guard("count_expected", [&] { *out = count_expected(t); });
}

zm_status zm_scan_zeros(const zm_context* ctx, double t_max, double grid_offset, zm_zero_set** out) {
  if (!ctx || !out) return null_arg("scan_zeros");
  return guard("scan_zeros", [&] {
    ScanOptions opts;
    opts.threads = ctx->threads;
    opts.grid_offset = grid_offset;
    auto set = std::make_unique<zm_zero_set>();
    set->set = scan_zeros(*ctx->engine, t_max, opts);
    *out = set.release();
  });
}

size_t zm_zero_set_size(const zm_zero_set* set) { return set ? set->set.zeros.size() : 0; }

zm_status zm_zero_set_get(const zm_zero_set* set, size_t index, zm_zero* out) {
  if (!set || !out) return null_arg("zero_set_get");
  if (index >= set->set.zeros.size()) {
    return set_error(ZM_ERR_INVALID_ARGUMENT, "capi", "zero_set_get", "index out of range");
  }
  *out = to_c(set->set.zeros[index]);
  return ZM_OK;
}

double zm_zero_set_t_max(const zm_zero_set* set) { return set ? set->set.t_max : 0.0; }
double zm_zero_set_count_expected(const zm_zero_set* set) { return set ? set->set.count_expected : 0.0; }
long zm_zero_set_count_reconciled(const zm_zero_set* set) { return set ? set->set.count_reconciled : 0; }
int zm_zero_set_flagged(const zm_zero_set* set) { return set ? set->set.flagged : 0; }

zm_status zm_zero_set_to_csv(const zm_zero_set* set, int with_metadata, char** out) {
  if (!set || !out) return null_arg("zero_set_to_csv");
  return guard("zero_set_to_csv", [&] { *out = dup_string(zeros_to_csv(set->set, with_metadata != 0)); });
}

zm_status zm_zero_set_to_json(const zm_zero_set* set, char** out) {
  if (!set || !out) return null_arg("zero_set_to_json");
  return guard("zero_set_to_json", [&] { *out = dup_string(zeros_json(set->set).dump()); });
}

zm_status zm_zero_set_from_csv(const char* text, zm_zero_set** out) {
  if (!text || !out) return null_arg("zero_set_from_csv");
  return guard("zero_set_from_csv", [&] {
    auto set = std::make_unique<zm_zero_set>();
    set->set = zeros_from_csv(text);
    *out = set.release();
  });
}

void zm_zero_set_destroy(zm_zero_set* set) { delete set; }

zm_status zm_stieltjes(int h_max, double* values, double* est_err) {
  if (!values) return null_arg("stieltjes");
  return guard("stieltjes", [&] {
    const auto t = stieltjes(h_max);
    for (int h = 0; h <= h_max; ++h) {
      values[h] = t[h];
      if (est_err) est_err[h] = t.est_err[static_cast<std::size_t>(h)];
    }
  });
}

zm_status zm_eta_coeffs(int k_max, double* values) {
  if (!values) return null_arg("eta_coeffs");
  return guard("eta_coeffs", [&] {
    const auto eta = eta_coeffs(default_table(), k_max);
    for (std::size_t i = 0; i < eta.size(); ++i) values[i] = eta[i];
  });
}

zm_status zm_constants_json(int order, char** out) {
  if (!out) return null_arg("constants");
  return guard("constants", [&] { *out = dup_string(constants_json(order).dump()); });
}

zm_status zm_coeff_table_create(int64_t n_max, zm_coeff_table** out) {
  if (!out) return null_arg("build_tables");
  return guard("build_tables", [&] { *out = new zm_coeff_table{CoeffTable::build(n_max)}; });
}

void zm_coeff_table_destroy(zm_coeff_table* table) { delete table; }

zm_status zm_lambda(const zm_coeff_table* table, int64_t n, double* out) {
  if (!table || !out) return null_arg("lambda");
  if (n < 1 || n > table->table.n_max()) {
    return set_error(ZM_ERR_TABLE, "arithmetic_sums", "lambda", "n outside the table");
  }
  *out = table->table.lambda(n);
  return ZM_OK;
}

zm_status zm_dd(const zm_coeff_table* table, int64_t n, double* out) {
  if (!table || !out) return null_arg("dd");
  if (n < 1 || n > table->table.n_max()) {
    return set_error(ZM_ERR_TABLE, "arithmetic_sums", "dd", "n outside the table");
  }
  *out = table->table.dd(n);
  return ZM_OK;
}

zm_status zm_conv_sum_ld(const zm_coeff_table* table, double x, double* out) {
  if (!table || !out) return null_arg("conv_sum_LD");
  return guard("conv_sum_LD", [&] { *out = table->table.conv_sum_ld(x); });
}

zm_status zm_weighted_sum(const zm_coeff_table* table, double x, zm_weighted_kind kind, double* out) {
  if (!table || !out) return null_arg("weighted_sums");
  if (kind != ZM_WEIGHTED_D_LOGN && kind != ZM_WEIGHTED_ONE_STAR_LOG_LOG2N) {
    return set_error(ZM_ERR_INVALID_ARGUMENT, "arithmetic_sums", "weighted_sums", "unknown kind");
  }
  return guard("weighted_sums", [&] {
    *out = table->table.weighted_sum(
        x, kind == ZM_WEIGHTED_D_LOGN ? WeightedKind::d_logn : WeightedKind::one_star_log_log2n);
  });
}

zm_status zm_gonek_lemma_check(const zm_context* ctx, double a, int m, double t_max, zm_coeff_kind kind,
                               zm_gonek_result* out) {
  if (!ctx || !out) return null_arg("gonek_lemma_check");
  if (kind < ZM_COEFF_LAMBDA_STAR_D || kind > ZM_COEFF_ONE_STAR_LOG) {
    return set_error(ZM_ERR_INVALID_ARGUMENT, "arithmetic_sums", "gonek_lemma_check", "unknown kind");
  }
  return guard("gonek_lemma_check", [&] {
    const auto r = gonek_lemma_check(*ctx->engine, a, m, t_max, static_cast<CoeffKind>(kind), ctx->threads);
    *out = {r.sum_side, to_c(r.integral_side), r.residual, r.envelope};
  });
}

zm_status zm_conv_sum_ld_residue(double x, double* out) {
  if (!out) return null_arg("residue_main_term");
  return guard("residue_main_term", [&] {
    const auto f = generating_series(GeneratingFunction::log_deriv_times_dzeta_sq, default_table());
    *out = -residue_main_term(f, x).value;
  });
}

zm_status zm_hall_poly(int k, double* coeffs) {
  if (!coeffs) return null_arg("hall_poly");
  return guard("hall_poly", [&] {
    const auto p = hall_poly(k, default_table());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) coeffs[i] = p.coeffs[i];
  });
}

zm_status zm_main_term_coeffs(double* total5, double* b5, double* c5) {
  return guard("main_term_theorem", [&] {
    const auto m = main_term_theorem(default_table());
    auto copy = [](const std::vector<double>& src, double* dst) {
      if (!dst) return;
      for (std::size_t i = 0; i < 5; ++i) dst[i] = i < src.size() ? src[i] : 0.0;
    };
    copy(m.total.coeffs, total5);
    copy(m.b_block.absolute_coeffs(), b5);
    copy(m.c_block.absolute_coeffs(), c5);
  });
}

zm_status zm_discrete_moment(const zm_context* ctx, const zm_zero_set* zeros, double t_max, zm_report** out) {
  if (!ctx || !zeros || !out) return null_arg("discrete_moment");
  return guard("discrete_moment", [&] {
    const auto m = main_term_theorem(ctx->engine->stieltjes_table());
    auto r = std::make_unique<zm_report>();
    r->report = discrete_moment(zeros->set, m, t_max);
    r->json = to_json(r->report);
    *out = r.release();
  });
}

zm_status zm_continuous_moment(const zm_context* ctx, int k, double t_max, zm_report** out) {
  if (!ctx || !out) return null_arg("continuous_moment");
  return guard("continuous_moment", [&] {
    auto r = std::make_unique<zm_report>();
    r->report = continuous_moment(*ctx->engine, k, t_max, {ctx->threads});
    r->json = to_json(r->report);
    *out = r.release();
  });
}

zm_status zm_weighted_moment(const zm_context* ctx, double t_max, zm_report** out) {
  if (!ctx || !out) return null_arg("weighted_continuous_moment");
  return guard("weighted_continuous_moment", [&] {
    auto r = std::make_unique<zm_report>();
    const auto w = weighted_continuous_moment(*ctx->engine, t_max, {ctx->threads});
    r->report = w.report;
    r->json = to_json(w);
    *out = r.release();
  });
}

double zm_report_t_max(const zm_report* r) { return r ? r->report.t_max : 0.0; }
double zm_report_computed(const zm_report* r) { return r ? r->report.computed : 0.0; }
double zm_report_predicted(const zm_report* r) { return r ? r->report.predicted : 0.0; }
double zm_report_residual(const zm_report* r) { return r ? r->report.residual : 0.0; }
double zm_report_residual_over_envelope(const zm_report* r) {
  return r ? r->report.residual_over_envelope : 0.0;
}

zm_status zm_report_part(const zm_report* r, const char* name, double* out) {
  if (!r || !name || !out) return null_arg("report_part");
  for (const auto& p : r->report.parts) {
    if (p.name == name) {
      *out = p.value;
      return ZM_OK;
    }
  }
  return set_error(ZM_ERR_INVALID_ARGUMENT, "capi", "report_part", std::string("no part named ") + name);
}

zm_status zm_report_to_json(const zm_report* r, char** out) {
  if (!r || !out) return null_arg("report_to_json");
  return guard("report_to_json", [&] { *out = dup_string(r->json.dump()); });
}

zm_status zm_report_to_csv(const zm_report* r, int with_header, char** out) {
  if (!r || !out) return null_arg("report_to_csv");
  return guard("report_to_csv", [&] {
    *out = dup_string((with_header ? report_csv_header() : std::string()) + to_csv_row(r->report));
  });
}

void zm_report_destroy(zm_report* r) { delete r; }

zm_status zm_asymptotics_json(double t_max, char** out) {
  if (!out) return null_arg("main_term_theorem");
  if (!(t_max > 2.0 * std::numbers::pi)) {
    return set_error(ZM_ERR_DOMAIN, "moments_asymptotics", "main_term_theorem", "t_max must exceed 2pi");
  }
  return guard("main_term_theorem", [&] {
    const auto& g = default_table();
    *out = dup_string(asymptotics_json(main_term_theorem(g), g, t_max).dump());
  });
}

zm_status zm_compare(const zm_context* ctx, const zm_zero_set* zeros, const double* t_grid, size_t n,
                     char** json_out, char** csv_out) {
  if (!ctx || !zeros || !t_grid) return null_arg("compare");
  return guard("compare", [&] {
    const auto c = compare(*ctx->engine, zeros->set, std::vector<double>(t_grid, t_grid + n));
    if (json_out) *json_out = dup_string(to_json(c).dump());
    if (csv_out) {
      std::string csv = report_csv_header();
      for (const auto& r : c.reports) csv += to_csv_row(r);
      *csv_out = dup_string(csv);
    }
  });
}

}  // extern "C"
