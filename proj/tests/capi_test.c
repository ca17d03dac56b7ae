#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "zmoment/zmoment.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__, \
              __LINE__, #cond);                                     \
      ++failures;                                                   \
    }                                                               \
  } while (0)

int main(void) {
  zm_context* ctx = NULL;
  zm_precision p;
  zm_precision_default(&p);
  EXPECT(zm_context_create(&p, &ctx) == ZM_OK);
  EXPECT(zm_context_set_threads(ctx, 2) == ZM_OK);
  EXPECT(zm_context_set_threads(ctx, 0) == ZM_ERR_CONFIG);

  zm_precision bad = p;
  bad.abs_tol = 1.0;
  zm_context* bad_ctx = NULL;
  EXPECT(zm_context_create(&bad, &bad_ctx) == ZM_ERR_CONFIG);
  EXPECT(bad_ctx == NULL);
  EXPECT(strlen(zm_last_error_message()) > 0);

  zm_complex v;
  zm_complex half = {0.5, 0.0};
  EXPECT(zm_log_gamma(half, &v) == ZM_OK && fabs(v.re - 0.5723649429247001) < 1e-12);
  zm_complex two = {2.0, 0.0};
  EXPECT(zm_chi(two, &v) == ZM_OK && fabs(v.re + 19.739208802178716) < 1e-9);
  zm_complex one = {1.0, 0.0};
  EXPECT(zm_zeta(ctx, one, 0, &v, NULL) == ZM_ERR_POLE);
  EXPECT(strcmp(zm_last_error_module(), "zeta_engine") == 0);
  EXPECT(zm_zeta(ctx, two, 0, &v, NULL) == ZM_OK && fabs(v.re - 1.6449340668482264) < 1e-12);
  double theta = 0.0;
  EXPECT(zm_theta(0.5, &theta) == ZM_ERR_DOMAIN);

  double z = 1.0;
  EXPECT(zm_hardy_z(ctx, 14.134725141734693, &z) == ZM_OK && fabs(z) < 1e-10);

  zm_zero_set* set = NULL;
  EXPECT(zm_scan_zeros(ctx, 100.0, 0.0, &set) == ZM_OK);
  EXPECT(zm_zero_set_size(set) == 29);
  EXPECT(zm_zero_set_count_reconciled(set) == 29);
  zm_zero first;
  EXPECT(zm_zero_set_get(set, 0, &first) == ZM_OK && fabs(first.gamma - 14.134725141734693) < 1e-9);
  EXPECT(zm_zero_set_get(set, 99, &first) == ZM_ERR_INVALID_ARGUMENT);

  char* csv = NULL;
  EXPECT(zm_zero_set_to_csv(set, 1, &csv) == ZM_OK);
  zm_zero_set* back = NULL;
  EXPECT(zm_zero_set_from_csv(csv, &back) == ZM_OK && zm_zero_set_size(back) == 29);
  zm_string_free(csv);

  zm_report* r = NULL;
  EXPECT(zm_discrete_moment(ctx, back, 100.0, &r) == ZM_OK);
  EXPECT(zm_report_computed(r) > 0.0);
  double part = 0.0;
  EXPECT(zm_report_part(r, "b_block", &part) == ZM_OK && part > 0.0);
  EXPECT(zm_report_part(r, "nope", &part) == ZM_ERR_INVALID_ARGUMENT);
  char* json = NULL;
  EXPECT(zm_report_to_json(r, &json) == ZM_OK && strstr(json, "\"computed\"") != NULL);
  zm_string_free(json);
  zm_report_destroy(r);

  double gammas[4];
  EXPECT(zm_stieltjes(3, gammas, NULL) == ZM_OK && fabs(gammas[0] - 0.5772156649015329) < 1e-12);
  double eta[2];
  EXPECT(zm_eta_coeffs(1, eta) == ZM_OK && fabs(eta[0] - gammas[0]) < 1e-10);
  double p3[4];
  EXPECT(zm_hall_poly(1, p3) == ZM_OK && p3[3] == 1.0);
  double total[5];
  EXPECT(zm_main_term_coeffs(total, NULL, NULL) == ZM_OK);
  EXPECT(fabs(total[4] - 1.0 / (24.0 * 3.14159265358979323846)) < 1e-12);

  zm_coeff_table* table = NULL;
  EXPECT(zm_coeff_table_create(100, &table) == ZM_OK);
  double s = 0.0;
  EXPECT(zm_conv_sum_ld(table, 8.0, &s) == ZM_OK && fabs(s - 0.33302465198892944) < 1e-12);
  EXPECT(zm_conv_sum_ld(table, 1000.0, &s) == ZM_ERR_TABLE);
  EXPECT(zm_dd(table, 4, &s) == ZM_OK && fabs(s - 0.4804530139182014) < 1e-12);
  zm_coeff_table_destroy(table);

  char* cmp = NULL;
  const double grid[] = {40.0, 60.0, 80.0, 100.0};
  EXPECT(zm_compare(ctx, set, grid, 4, &cmp, NULL) == ZM_OK && strstr(cmp, "\"summary\"") != NULL);
  zm_string_free(cmp);

  EXPECT(zm_scan_zeros(NULL, 100.0, 0.0, &set) == ZM_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(zm_version()) > 0);

  zm_zero_set_destroy(back);
  zm_zero_set_destroy(set);
  zm_context_destroy(ctx);
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
