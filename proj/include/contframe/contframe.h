// include/contframe/contframe.h

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

/*
 * C interface to the contframe library. All objects are opaque handles
 * owned by the caller and released with the matching *_destroy function.
 * Every fallible call returns a cf_status; on failure the message of the
 * last error on the calling thread is available from cf_last_error_message.
 * Strings returned through char** out-parameters are released with
 * cf_string_free.
 */
#ifndef CONTFRAME_CONTFRAME_H_
#define CONTFRAME_CONTFRAME_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(CONTFRAME_BUILDING)
#define CF_API __declspec(dllexport)
#else
#define CF_API __declspec(dllimport)
#endif
#else
#define CF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf_status {
  CF_OK = 0,
  CF_ERR_SPACE_MISMATCH = 1,
  CF_ERR_WRONG_SPACE_KIND = 2,
  CF_ERR_NON_POSITIVE_WEIGHT = 3,
  CF_ERR_LENGTH_MISMATCH = 4,
  CF_ERR_COUNT_MISMATCH = 5,
  CF_ERR_DIMENSION_TOO_LARGE = 6,
  CF_ERR_NOT_A_FRAME = 7,
  CF_ERR_SOLVER_DIVERGED = 8,
  CF_ERR_ZERO_VECTOR = 9,
  CF_ERR_BOUND_ORDER_VIOLATION = 10,
  CF_ERR_NOT_ADMISSIBLE = 11,
  CF_ERR_ZERO_SCALE = 12,
  CF_ERR_GRID_MISMATCH = 13,
  CF_ERR_MISSING_ADMISSIBILITY = 14,
  CF_ERR_ZERO_WINDOW = 15,
  CF_ERR_INVALID_ARGUMENT = 16,
  CF_ERR_IO = 17,
  CF_ERR_PARSE = 18,
  CF_ERR_NULL_ARGUMENT = 98,
  CF_ERR_INTERNAL = 99
} cf_status;

typedef enum cf_verdict {
  CF_VERDICT_FRAME = 0,
  CF_VERDICT_BESSEL_ONLY = 1,
  CF_VERDICT_INVALID = 2
} cf_verdict;

typedef struct cf_vec cf_vec;
typedef struct cf_frame cf_frame;
typedef struct cf_report cf_report;
typedef struct cf_field cf_field;
typedef struct cf_wavelet cf_wavelet;
typedef struct cf_window cf_window;

typedef struct cf_admissibility {
  double c_psi;
  double c_positive;
  double c_negative;
  double dc_magnitude;
  int near_divergence;
} cf_admissibility;

/* ---- General ---- */
CF_API const char *cf_version(void);
CF_API const char *cf_status_string(cf_status status);
CF_API const char *cf_last_error_message(void);
CF_API void cf_string_free(char *s);

/* ---- Vectors ---- */
/* im may be NULL for real data. */
CF_API cf_status cf_vec_create_coordinate(size_t dim, const double *re, const double *im,
                                          cf_vec **out);
/* Samples at x_j = xmin + j (xmax - xmin) / count. */
CF_API cf_status cf_vec_create_sampled(double xmin, double xmax, size_t count, const double *re,
                                       const double *im, cf_vec **out);
/* entries_json: array of numbers or [re, im] pairs; coordinate space. */
CF_API cf_status cf_vec_from_json(const char *entries_json, cf_vec **out);
CF_API cf_status cf_vec_read_csv(const char *path, cf_vec **out);
CF_API cf_status cf_vec_write_csv(const cf_vec *v, const char *path);
CF_API size_t cf_vec_length(const cf_vec *v);
/* Grid of a sampled vector; sampled is 0 for coordinate vectors (then the
   other outputs are left untouched). Any output may be NULL. */
CF_API cf_status cf_vec_grid(const cf_vec *v, int *sampled, double *xmin, double *xmax,
                             double *step);
/* Copies the entries into caller arrays of cf_vec_length() doubles. */
CF_API cf_status cf_vec_get(const cf_vec *v, double *re, double *im);
CF_API cf_status cf_vec_norm(const cf_vec *v, double *out);
/* ||approx - ref|| / ||ref||. */
CF_API cf_status cf_vec_relative_error(const cf_vec *approx, const cf_vec *ref, double *out);
CF_API void cf_vec_destroy(cf_vec *v);

/* ---- Frames ---- */
CF_API cf_status cf_frame_from_json(const char *json_text, cf_frame **out);
CF_API cf_status cf_frame_read_json(const char *path, cf_frame **out);
CF_API cf_status cf_frame_to_json(const cf_frame *fr, char **out_json);
/* Builds a frame from a construction spec {"construct": ...}. details_json
   (optional) receives {"kind", "expected_verdict", "expect_parseval",
   "details"}. */
CF_API cf_status cf_frame_construct(const char *spec_json, cf_frame **out, char **details_json);
CF_API size_t cf_frame_node_count(const cf_frame *fr);
CF_API size_t cf_frame_dim(const cf_frame *fr);
CF_API void cf_frame_destroy(cf_frame *fr);

/* Certified bounds. Non-positive tolerances select the defaults. */
CF_API cf_status cf_frame_bounds(const cf_frame *fr, double tol_frame_relative,
                                 double tol_parseval, cf_report **out);
CF_API double cf_report_lower(const cf_report *r);
CF_API double cf_report_upper(const cf_report *r);
CF_API int cf_report_parseval(const cf_report *r);
CF_API cf_verdict cf_report_verdict(const cf_report *r);
/* Rank, or -1 when the iterative path left it undetermined. */
CF_API int cf_report_rank(const cf_report *r);
CF_API cf_status cf_report_to_json(const cf_report *r, char **out_json);
CF_API void cf_report_destroy(cf_report *r);

/* Dual-frame reconstruction; fails with CF_ERR_SOLVER_DIVERGED when the
   residual exceeds tol_recon (non-positive selects the default). */
CF_API cf_status cf_frame_reconstruct(const cf_frame *fr, const cf_vec *f, double tol_recon,
                                      cf_vec **f_hat, double *residual, size_t *iterations);

/* ---- Wavelets ---- */
/* name: "mexican_hat" or "morlet", sampled on the given grid. */
CF_API cf_status cf_wavelet_create(const char *name, double xmin, double xmax, size_t count,
                                   cf_wavelet **out);
CF_API cf_status cf_wavelet_from_vec(const cf_vec *psi, cf_wavelet **out);
/* Computes the admissibility constant and stores it in the wavelet. */
CF_API cf_status cf_wavelet_admissibility(cf_wavelet *w, cf_admissibility *out);
CF_API void cf_wavelet_destroy(cf_wavelet *w);

/* Requires cf_wavelet_admissibility to have run. */
CF_API cf_status cf_cwt(const cf_vec *f, const cf_wavelet *w, double amin, double amax,
                        int voices, int mirror, size_t stride, cf_field **out);
CF_API cf_status cf_icwt(const cf_field *field, const cf_wavelet *w, cf_vec **out);
CF_API cf_status cf_cwt_energy_ratio(const cf_field *field, const cf_wavelet *w, const cf_vec *f,
                                     double *out);

/* ---- Gabor ---- */
/* Unit-energy Gaussian 2^(1/4) exp(-pi t^2) on the given grid. */
CF_API cf_status cf_window_gauss(double xmin, double xmax, size_t count, cf_window **out);
CF_API cf_status cf_window_from_vec(const cf_vec *g, cf_window **out);
CF_API double cf_window_norm_sq(const cf_window *w);
CF_API void cf_window_destroy(cf_window *w);

CF_API cf_status cf_stft(const cf_vec *f, const cf_window *w, double ymin, double ymax, double dy,
                         double gmin, double gmax, double dg, cf_field **out);
CF_API cf_status cf_istft(const cf_field *field, const cf_window *w, cf_vec **out);

/* ---- Coefficient fields ---- */
CF_API size_t cf_field_rows(const cf_field *field);
CF_API size_t cf_field_cols(const cf_field *field);
/* Weighted energy sum w |c|^2 over all nodes. */
CF_API cf_status cf_field_energy(const cf_field *field, double *out);
CF_API cf_status cf_field_write_csv(const cf_field *field, const char *path);
CF_API void cf_field_destroy(cf_field *field);

/* ---- Verification suite ---- */
/* full = 0 runs the small suite. all_pass may be NULL. */
CF_API cf_status cf_verify_suite(int full, double tol_recon, char **out_json, int *all_pass);

#ifdef __cplusplus
}
#endif

#endif /* CONTFRAME_CONTFRAME_H_ */
