/*
 * zmoment C API.
 *
 * Every function returns a zm_status; on failure the thread-local
 * zm_last_error_* accessors describe the module, operation and reason.
 * Strings returned through char** are heap-allocated and released with
 * zm_string_free.
 */
#ifndef ZMOMENT_ZMOMENT_H
#define ZMOMENT_ZMOMENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(ZMOMENT_BUILDING_LIBRARY)
#define ZM_API __attribute__((visibility("default")))
#else
#define ZM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zm_status {
  ZM_OK = 0,
  ZM_ERR_INVALID_ARGUMENT = 1,
  ZM_ERR_CONFIG = 2,
  ZM_ERR_DOMAIN = 3,
  ZM_ERR_POLE = 4,
  ZM_ERR_OVERFLOW = 5,
  ZM_ERR_ENVELOPE = 6,
  ZM_ERR_ACCURACY = 7,
  ZM_ERR_QUADRATURE = 8,
  ZM_ERR_COUNT_MISMATCH = 9,
  ZM_ERR_SERIES = 10,
  ZM_ERR_TABLE = 11,
  ZM_ERR_IO = 12,
  ZM_ERR_INTERNAL = 13
} zm_status;

typedef struct zm_complex {
  double re;
  double im;
} zm_complex;

typedef struct zm_precision {
  double abs_tol;
  double rel_tol;
  int max_series_terms;
} zm_precision;

typedef struct zm_zero {
  double gamma;
  double z_prime;
  double bracket_lo;
  double bracket_hi;
  int refine_iters;
  int flagged;
} zm_zero;

typedef enum zm_weighted_kind { ZM_WEIGHTED_D_LOGN = 0, ZM_WEIGHTED_ONE_STAR_LOG_LOG2N = 1 } zm_weighted_kind;

typedef enum zm_coeff_kind {
  ZM_COEFF_LAMBDA_STAR_D = 0,
  ZM_COEFF_D = 1,
  ZM_COEFF_ONE_STAR_LOG = 2
} zm_coeff_kind;

typedef struct zm_gonek_result {
  double sum_side;
  zm_complex integral_side;
  double residual;
  double envelope;
} zm_gonek_result;

typedef struct zm_context zm_context;
typedef struct zm_zero_set zm_zero_set;
typedef struct zm_coeff_table zm_coeff_table;
typedef struct zm_report zm_report;

/* Library metadata and diagnostics. */
ZM_API const char* zm_version(void);
ZM_API const char* zm_status_string(zm_status status);
ZM_API const char* zm_last_error_message(void);
ZM_API const char* zm_last_error_module(void);
ZM_API const char* zm_last_error_operation(void);
ZM_API void zm_string_free(char* s);

/* Context: precision settings, worker cap and the shared zeta engine. */
ZM_API void zm_precision_default(zm_precision* out);
ZM_API zm_status zm_context_create(const zm_precision* precision, zm_context** out);
ZM_API void zm_context_destroy(zm_context* ctx);
ZM_API zm_status zm_context_set_threads(zm_context* ctx, unsigned threads);
ZM_API zm_status zm_context_precision(const zm_context* ctx, zm_precision* out);
ZM_API uint64_t zm_context_precision_hash(const zm_context* ctx);

/* Special functions. */
ZM_API zm_status zm_log_gamma(zm_complex s, zm_complex* out);
ZM_API zm_status zm_chi(zm_complex s, zm_complex* out);
ZM_API zm_status zm_omega(zm_complex s, zm_complex* out);
ZM_API zm_status zm_theta(double t, double* out);
ZM_API zm_status zm_theta_prime(double t, double* out);

/* Zeta engine. */
ZM_API zm_status zm_zeta(const zm_context* ctx, zm_complex s, int order, zm_complex* value,
                         double* est_abs_err);
ZM_API zm_status zm_hardy_z(const zm_context* ctx, double t, double* out);
ZM_API zm_status zm_hardy_z_prime(const zm_context* ctx, double t, double* out);
ZM_API zm_status zm_z1(const zm_context* ctx, zm_complex s, zm_complex* out);

/* Zeros of Z on (0, t_max]. */
ZM_API zm_status zm_count_expected(double t, double* out);
ZM_API zm_status zm_scan_zeros(const zm_context* ctx, double t_max, double grid_offset,
                               zm_zero_set** out);
ZM_API size_t zm_zero_set_size(const zm_zero_set* set);
ZM_API zm_status zm_zero_set_get(const zm_zero_set* set, size_t index, zm_zero* out);
ZM_API double zm_zero_set_t_max(const zm_zero_set* set);
ZM_API double zm_zero_set_count_expected(const zm_zero_set* set);
ZM_API long zm_zero_set_count_reconciled(const zm_zero_set* set);
ZM_API int zm_zero_set_flagged(const zm_zero_set* set);
ZM_API zm_status zm_zero_set_to_csv(const zm_zero_set* set, int with_metadata, char** out);
ZM_API zm_status zm_zero_set_to_json(const zm_zero_set* set, char** out);
ZM_API zm_status zm_zero_set_from_csv(const char* text, zm_zero_set** out);
ZM_API void zm_zero_set_destroy(zm_zero_set* set);

/* Laurent constants at s = 1. values / est_err hold h_max + 1 entries. */
ZM_API zm_status zm_stieltjes(int h_max, double* values, double* est_err);
ZM_API zm_status zm_eta_coeffs(int k_max, double* values);
ZM_API zm_status zm_constants_json(int order, char** out);

/* Arithmetic sums. */
ZM_API zm_status zm_coeff_table_create(int64_t n_max, zm_coeff_table** out);
ZM_API void zm_coeff_table_destroy(zm_coeff_table* table);
ZM_API zm_status zm_lambda(const zm_coeff_table* table, int64_t n, double* out);
ZM_API zm_status zm_dd(const zm_coeff_table* table, int64_t n, double* out);
ZM_API zm_status zm_conv_sum_ld(const zm_coeff_table* table, double x, double* out);
ZM_API zm_status zm_weighted_sum(const zm_coeff_table* table, double x, zm_weighted_kind kind,
                                 double* out);
ZM_API zm_status zm_gonek_lemma_check(const zm_context* ctx, double a, int m, double t_max,
                                      zm_coeff_kind kind, zm_gonek_result* out);
/* -Res_{s=1} (zeta'/zeta) zeta'^2 x^s / s. */
ZM_API zm_status zm_conv_sum_ld_residue(double x, double* out);

/* Moments and asymptotics. */
ZM_API zm_status zm_hall_poly(int k, double* coeffs);
ZM_API zm_status zm_main_term_coeffs(double* total5, double* b5, double* c5);
ZM_API zm_status zm_discrete_moment(const zm_context* ctx, const zm_zero_set* zeros, double t_max,
                                    zm_report** out);
ZM_API zm_status zm_continuous_moment(const zm_context* ctx, int k, double t_max, zm_report** out);
ZM_API zm_status zm_weighted_moment(const zm_context* ctx, double t_max, zm_report** out);
ZM_API double zm_report_t_max(const zm_report* r);
ZM_API double zm_report_computed(const zm_report* r);
ZM_API double zm_report_predicted(const zm_report* r);
ZM_API double zm_report_residual(const zm_report* r);
ZM_API double zm_report_residual_over_envelope(const zm_report* r);
/* Named part of the report breakdown; ZM_ERR_INVALID_ARGUMENT if absent. */
ZM_API zm_status zm_report_part(const zm_report* r, const char* name, double* out);
ZM_API zm_status zm_report_to_json(const zm_report* r, char** out);
ZM_API zm_status zm_report_to_csv(const zm_report* r, int with_header, char** out);
ZM_API void zm_report_destroy(zm_report* r);

ZM_API zm_status zm_asymptotics_json(double t_max, char** out);
ZM_API zm_status zm_compare(const zm_context* ctx, const zm_zero_set* zeros, const double* t_grid,
                            size_t n, char** json_out, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* ZMOMENT_ZMOMENT_H */
