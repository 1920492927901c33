// Copyright 2026 The gbslxe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to libgbslxe.
 *
 * All objects are opaque handles created by *_create / constructor functions
 * and released with the matching *_free. Every fallible call returns a
 * gbslxe_status; on failure a description of the last error on the calling
 * thread is available from gbslxe_last_error(). */
#ifndef GBSLXE_GBSLXE_H
#define GBSLXE_GBSLXE_H

#include <stddef.h>
#include <stdint.h>

#if defined(GBSLXE_BUILDING_LIBRARY)
#define GBSLXE_API __attribute__((visibility("default")))
#else
#define GBSLXE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gbslxe_status {
    GBSLXE_OK = 0,
    GBSLXE_ERR_INVALID_ARGUMENT = 1,
    GBSLXE_ERR_PARSE = 2,
    GBSLXE_ERR_IO = 3,
    GBSLXE_ERR_RESOURCE_GUARD = 4,
    GBSLXE_ERR_NUMERIC = 5,
    GBSLXE_ERR_INTERNAL = 6
} gbslxe_status;

typedef enum gbslxe_method {
    GBSLXE_METHOD_BRUTEFORCE = 0,
    GBSLXE_METHOD_SAMPLES = 1,
    GBSLXE_METHOD_MONTECARLO = 2,
    GBSLXE_METHOD_CLOSED_FORM = 3
} gbslxe_method;

typedef struct gbslxe_unitary gbslxe_unitary;
typedef struct gbslxe_model gbslxe_model;
typedef struct gbslxe_samples gbslxe_samples;
typedef struct gbslxe_reports gbslxe_reports;
typedef struct gbslxe_coefficients gbslxe_coefficients;

typedef struct gbslxe_score {
    int sector;
    double value;
    double std_error;
    gbslxe_method method;
    char digest[17];
} gbslxe_score;

typedef void (*gbslxe_progress_fn)(void *user_data, uint64_t done, uint64_t total);
typedef void (*gbslxe_line_fn)(void *user_data, const char *line);

GBSLXE_API const char *gbslxe_version(void);
/* Message of the last failed call on this thread, or "" if none. */
GBSLXE_API const char *gbslxe_last_error(void);
/* Default brute-force bound on |K(N)|. */
GBSLXE_API uint64_t gbslxe_default_guard(void);

/* ---- Unitaries ---------------------------------------------------------- */

GBSLXE_API gbslxe_status gbslxe_unitary_haar(int m, uint64_t seed, gbslxe_unitary **out);
GBSLXE_API gbslxe_status gbslxe_unitary_identity(int m, gbslxe_unitary **out);
/* Reads a unitary file. With project_nearest != 0 the matrix is replaced by
 * the unitary polar factor of its SVD, which also accepts lossy transfer
 * matrices. */
GBSLXE_API gbslxe_status gbslxe_unitary_read(const char *path, int project_nearest, gbslxe_unitary **out);
GBSLXE_API gbslxe_status gbslxe_unitary_write(const gbslxe_unitary *u, const char *path);
GBSLXE_API int gbslxe_unitary_modes(const gbslxe_unitary *u);
GBSLXE_API gbslxe_status gbslxe_unitary_entry(const gbslxe_unitary *u, int row, int col, double *re, double *im);
GBSLXE_API void gbslxe_unitary_free(gbslxe_unitary *u);

/* ---- Models ------------------------------------------------------------- */

GBSLXE_API gbslxe_status gbslxe_model_squeezed(double r, int squeezed_modes, const gbslxe_unitary *u,
                                               gbslxe_model **out);
GBSLXE_API gbslxe_status gbslxe_model_thermal(double nbar, int m, gbslxe_model **out);
/* Variances in the dimensionless form 2 sigma / hbar, length = modes of u. */
GBSLXE_API gbslxe_status gbslxe_model_general(const double *sigma_x, const double *sigma_p, const gbslxe_unitary *u,
                                              gbslxe_model **out);
GBSLXE_API int gbslxe_model_modes(const gbslxe_model *model);
GBSLXE_API gbslxe_status gbslxe_model_validity(const gbslxe_model *model, double *g_norm, int *valid);
GBSLXE_API gbslxe_status gbslxe_model_probability(const gbslxe_model *model, const int *pattern, int length,
                                                  double *out);
GBSLXE_API gbslxe_status gbslxe_model_sector_probability(const gbslxe_model *model, int photons, double *out);
GBSLXE_API void gbslxe_model_free(gbslxe_model *model);

/* ---- Sample sets -------------------------------------------------------- */

GBSLXE_API gbslxe_status gbslxe_samples_bruteforce(const gbslxe_model *model, int photons, size_t count,
                                                   uint64_t seed, uint64_t guard, gbslxe_samples **out);
/* Appends the samples of src to dst; both must have the same mode count. */
GBSLXE_API gbslxe_status gbslxe_samples_append(gbslxe_samples *dst, const gbslxe_samples *src);
GBSLXE_API gbslxe_status gbslxe_samples_set_meta(gbslxe_samples *s, const char *key, const char *value);
GBSLXE_API gbslxe_status gbslxe_samples_set_unitary_ref(gbslxe_samples *s, const char *ref);
GBSLXE_API gbslxe_status gbslxe_samples_read(const char *path, gbslxe_samples **out);
GBSLXE_API gbslxe_status gbslxe_samples_write(const gbslxe_samples *s, const char *path);
GBSLXE_API size_t gbslxe_samples_count(const gbslxe_samples *s);
GBSLXE_API int gbslxe_samples_modes(const gbslxe_samples *s);
/* Number of samples whose total photon number is `photons`. */
GBSLXE_API size_t gbslxe_samples_sector_count(const gbslxe_samples *s, int photons);
GBSLXE_API void gbslxe_samples_free(gbslxe_samples *s);

/* ---- Scores ------------------------------------------------------------- */

GBSLXE_API gbslxe_status gbslxe_lxe_bruteforce(const gbslxe_model *a, const gbslxe_model *b, int photons,
                                               uint64_t guard, unsigned threads, double *out);

GBSLXE_API gbslxe_status gbslxe_reports_create(gbslxe_reports **out);
GBSLXE_API size_t gbslxe_reports_count(const gbslxe_reports *r);
GBSLXE_API gbslxe_status gbslxe_reports_get(const gbslxe_reports *r, size_t index, gbslxe_score *out);
GBSLXE_API gbslxe_status gbslxe_reports_set_meta(gbslxe_reports *r, size_t index, const char *key, const char *value);
/* Appends a closed-form entry (std_error 0). */
GBSLXE_API gbslxe_status gbslxe_reports_add_closed_form(gbslxe_reports *r, int sector, double value,
                                                        const char *label);
GBSLXE_API gbslxe_status gbslxe_reports_write(const gbslxe_reports *r, const char *path);
GBSLXE_API void gbslxe_reports_free(gbslxe_reports *r);

/* Estimates the score of the squeezed model (r, R, u) from samples and
 * appends a report. */
GBSLXE_API gbslxe_status gbslxe_score_from_samples(const gbslxe_samples *samples, const gbslxe_unitary *u, double r,
                                                   int squeezed_modes, int photons, unsigned threads,
                                                   gbslxe_reports *into);
/* Haar Monte Carlo estimate at finite M; appends a report. */
GBSLXE_API gbslxe_status gbslxe_mc_haar_score(double r, int squeezed_modes, int m, int photons, size_t trials,
                                              uint64_t seed, uint64_t guard, unsigned threads,
                                              gbslxe_reports *into);

/* ---- Ideal score coefficients ------------------------------------------ */

/* Coefficients for 2N = 2 * half_size photons. When cache_path is non-NULL,
 * an existing entry is loaded from it, and a freshly computed table is merged
 * into it. */
GBSLXE_API gbslxe_status gbslxe_coefficients_get(int half_size, const char *cache_path, unsigned threads,
                                                 int max_half_size, gbslxe_progress_fn progress, void *user_data,
                                                 gbslxe_coefficients **out);
GBSLXE_API int gbslxe_coefficients_half_size(const gbslxe_coefficients *c);
/* c_ell as "num/den" (or an integer) into buf. */
GBSLXE_API gbslxe_status gbslxe_coefficients_c(const gbslxe_coefficients *c, int ell, char *buf, size_t len);
GBSLXE_API size_t gbslxe_coefficients_row_count(const gbslxe_coefficients *c);
/* One table row rendered as "k l v #b v*#b". */
GBSLXE_API gbslxe_status gbslxe_coefficients_row(const gbslxe_coefficients *c, size_t index, char *buf, size_t len);
GBSLXE_API gbslxe_status gbslxe_ideal_score(const gbslxe_coefficients *c, int squeezed_modes, double *value,
                                            char *exact, size_t exact_len);
GBSLXE_API gbslxe_status gbslxe_ideal_score_novacuum(const gbslxe_coefficients *c, double *value, char *exact,
                                                     size_t exact_len, int *matches_closed_form);
GBSLXE_API void gbslxe_coefficients_free(gbslxe_coefficients *c);

/* ---- Self-check --------------------------------------------------------- */

GBSLXE_API gbslxe_status gbslxe_verify(int deep, unsigned threads, uint64_t seed, gbslxe_line_fn on_line,
                                       void *user_data, int *passed, int *failed);

#ifdef __cplusplus
}
#endif

#endif
