// tests/test_capi.c

// Copyright 2026  The contframe Authors

// See ../../COPYING for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

/* Exercises the C interface through the shared library only. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "contframe/contframe.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__, \
              __LINE__, #cond);                                   \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_bounds(void) {
  cf_frame *fr = NULL;
  cf_report *rep = NULL;
  char *json = NULL;
  EXPECT(cf_frame_from_json("{\"frame\":{\"vectors\":[[1,0],[0,1],[1,1]]}}", &fr) == CF_OK);
  EXPECT(cf_frame_dim(fr) == 2);
  EXPECT(cf_frame_node_count(fr) == 3);
  EXPECT(cf_frame_bounds(fr, 0.0, 0.0, &rep) == CF_OK);
  EXPECT(fabs(cf_report_lower(rep) - 1.0) < 1e-12);
  EXPECT(fabs(cf_report_upper(rep) - 3.0) < 1e-12);
  EXPECT(cf_report_verdict(rep) == CF_VERDICT_FRAME);
  EXPECT(cf_report_rank(rep) == 2);
  EXPECT(cf_report_parseval(rep) == 0);
  EXPECT(cf_report_to_json(rep, &json) == CF_OK);
  EXPECT(strstr(json, "\"verdict\":\"Frame\"") != NULL);
  cf_string_free(json);

  {
    const double re[2] = {0.5, -2.0};
    const double im[2] = {1.0, 0.25};
    cf_vec *f = NULL, *back = NULL;
    double residual = -1.0, err = -1.0;
    size_t iterations = 0;
    EXPECT(cf_vec_create_coordinate(2, re, im, &f) == CF_OK);
    EXPECT(cf_frame_reconstruct(fr, f, 0.0, &back, &residual, &iterations) == CF_OK);
    EXPECT(residual >= 0.0 && residual <= 1e-8);
    EXPECT(cf_vec_relative_error(back, f, &err) == CF_OK && err <= 1e-8);
    cf_vec_destroy(back);
    cf_vec_destroy(f);
  }
  cf_report_destroy(rep);
  cf_frame_destroy(fr);
}

static void test_construct(void) {
  cf_frame *fr = NULL;
  cf_report *rep = NULL;
  char *details = NULL;
  EXPECT(cf_frame_construct("{\"construct\":\"parseval\",\"dim\":8,\"cells\":8}", &fr, &details) == CF_OK);
  EXPECT(strstr(details, "\"expect_parseval\":true") != NULL);
  EXPECT(cf_frame_bounds(fr, 0.0, 0.0, &rep) == CF_OK);
  EXPECT(cf_report_parseval(rep) == 1);
  cf_string_free(details);
  cf_report_destroy(rep);
  cf_frame_destroy(fr);

  fr = NULL;
  EXPECT(cf_frame_construct("{\"construct\":\"parseval\",\"dim\":8,\"cells\":5}", &fr, NULL) ==
         CF_ERR_COUNT_MISMATCH);
  EXPECT(fr == NULL);
  EXPECT(strstr(cf_last_error_message(), "CountMismatch") != NULL);
  EXPECT(strcmp(cf_status_string(CF_ERR_COUNT_MISMATCH), "CountMismatch") == 0);
  EXPECT(cf_frame_construct("{not json", &fr, NULL) == CF_ERR_PARSE);
}

static void test_errors(void) {
  cf_frame *fr = NULL;
  cf_vec *v = NULL;
  EXPECT(cf_frame_from_json(NULL, &fr) == CF_ERR_NULL_ARGUMENT);
  EXPECT(cf_frame_from_json("{\"frame\":{\"weights\":[1,-1],\"vectors\":[[1],[1]]}}", &fr) ==
         CF_ERR_NON_POSITIVE_WEIGHT);
  EXPECT(cf_vec_read_csv("/nonexistent/file.csv", &v) == CF_ERR_IO);
  EXPECT(cf_frame_read_json("/nonexistent/frame.json", &fr) == CF_ERR_IO);
  EXPECT(strcmp(cf_status_string(CF_OK), "Ok") == 0);
  EXPECT(strcmp(cf_version(), "1.0.0") == 0);
}

static void test_transforms(void) {
  enum { N = 512 };
  double re[N];
  double xmin = -8.0, xmax = 8.0, step = 0.0;
  cf_vec *f = NULL, *back = NULL;
  cf_wavelet *w = NULL;
  cf_window *g = NULL;
  cf_field *field = NULL;
  cf_admissibility adm;
  double ratio = 0.0, err = 1.0, energy = 0.0;
  int sampled = 0;
  int i;
  for (i = 0; i < N; ++i) {
    const double x = xmin + i * (xmax - xmin) / N;
    re[i] = exp(-M_PI * x * x);
  }
  EXPECT(cf_vec_create_sampled(xmin, xmax, N, re, NULL, &f) == CF_OK);
  EXPECT(cf_vec_grid(f, &sampled, NULL, NULL, &step) == CF_OK);
  EXPECT(sampled == 1 && fabs(step - 1.0 / 32) < 1e-15);

  EXPECT(cf_wavelet_create("mexican_hat", -16.0, 16.0, 4096, &w) == CF_OK);
  EXPECT(cf_cwt(f, w, 0.25, 8.0, 16, 0, 1, &field) == CF_OK);
  EXPECT(cf_icwt(field, w, &back) == CF_ERR_MISSING_ADMISSIBILITY);
  EXPECT(cf_wavelet_admissibility(w, &adm) == CF_OK);
  EXPECT(fabs(adm.c_psi - 2.0 * M_PI) < 1e-3);
  EXPECT(cf_cwt_energy_ratio(field, w, f, &ratio) == CF_OK);
  EXPECT(ratio > 0.0);
  cf_field_destroy(field);
  cf_wavelet_destroy(w);
  w = NULL;
  EXPECT(cf_wavelet_create("haar", -1.0, 1.0, 8, &w) == CF_ERR_INVALID_ARGUMENT);
  EXPECT(w == NULL);

  EXPECT(cf_window_gauss(-16.0, 16.0, 1024, &g) == CF_OK);
  EXPECT(fabs(cf_window_norm_sq(g) - 1.0) < 1e-12);
  EXPECT(cf_stft(f, g, -6.0, 6.0, 1.0 / 16, -6.0, 6.0, 1.0 / 16, &field) == CF_OK);
  EXPECT(cf_field_rows(field) == 193 && cf_field_cols(field) == 193);
  EXPECT(cf_field_energy(field, &energy) == CF_OK);
  EXPECT(fabs(energy - 1.0 / sqrt(2.0)) < 1e-3);
  EXPECT(cf_istft(field, g, &back) == CF_OK);
  EXPECT(cf_vec_relative_error(back, f, &err) == CF_OK && err < 0.01);
  cf_vec_destroy(back);
  cf_field_destroy(field);
  cf_window_destroy(g);
  cf_vec_destroy(f);
}

static void test_suite(void) {
  char *json = NULL;
  int all_pass = 0;
  EXPECT(cf_verify_suite(0, 0.0, &json, &all_pass) == CF_OK);
  EXPECT(all_pass == 1);
  EXPECT(strstr(json, "\"determinism\"") != NULL);
  cf_string_free(json);
  EXPECT(cf_verify_suite(0, 1e-15, &json, &all_pass) == CF_OK);
  EXPECT(all_pass == 0);
  cf_string_free(json);
}

int main(void) {
  test_bounds();
  test_construct();
  test_errors();
  test_transforms();
  test_suite();
  if (failures != 0) {
    fprintf(stderr, "%d C API expectation(s) failed\n", failures);
    return 1;
  }
  printf("C API: all expectations passed\n");
  return 0;
}
