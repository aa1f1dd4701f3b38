// Copyright 2026 The gapchamp Authors
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

/*
 * C interface to the gapchamp prime-gap statistics engine.
 *
 * All functions return a gch_status; on failure a message is available from
 * gch_last_error() on the calling thread. Strings returned through char**
 * out-parameters are heap allocated and must be released with
 * gch_string_free(). Opaque handles are released with their *_free function.
 */
#ifndef GAPCHAMP_H
#define GAPCHAMP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GAPCHAMP_BUILDING)
#    define GAPCHAMP_API __declspec(dllexport)
#  else
#    define GAPCHAMP_API __declspec(dllimport)
#  endif
#else
#  define GAPCHAMP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gch_status {
    GCH_OK = 0,
    GCH_ERR_DOMAIN = 1,
    GCH_ERR_RANGE = 2,
    GCH_ERR_ARGUMENT = 3,
    GCH_ERR_RESOURCE = 4,
    GCH_ERR_PRECISION = 5,
    GCH_ERR_CHECKPOINT = 6,
    GCH_ERR_IO = 7,
    GCH_ERR_INTERNAL = 8
} gch_status;

GAPCHAMP_API const char* gch_version(void);
GAPCHAMP_API const char* gch_status_name(gch_status status);
GAPCHAMP_API const char* gch_last_error(void);
GAPCHAMP_API void gch_string_free(char* s);

/* Sieve tuning. segment_size counts odd candidates per tile. */
typedef struct gch_sieve_config {
    uint64_t segment_size;
    uint32_t worker_count;
} gch_sieve_config;

/* Default tile size; worker_count from GAPCHAMP_THREADS, else the hardware
 * concurrency. */
GAPCHAMP_API gch_sieve_config gch_sieve_config_default(void);

/* ---- primes ---------------------------------------------------------- */

GAPCHAMP_API gch_status gch_prime_count(uint64_t x, uint64_t* out);
GAPCHAMP_API gch_status gch_chebyshev_theta(uint64_t x, double* out);
GAPCHAMP_API gch_status gch_mertens_reciprocal_sum(uint64_t x, double* out);
GAPCHAMP_API gch_status gch_mertens_product(uint64_t x, double* out);

/* ---- gap statistics -------------------------------------------------- */

typedef struct gch_histogram gch_histogram;

GAPCHAMP_API gch_status gch_histogram_compute(uint64_t x, const gch_sieve_config* cfg, gch_histogram** out);
GAPCHAMP_API void gch_histogram_free(gch_histogram* h);
GAPCHAMP_API uint64_t gch_histogram_upper_bound(const gch_histogram* h);
GAPCHAMP_API size_t gch_histogram_size(const gch_histogram* h);
GAPCHAMP_API gch_status gch_histogram_entry(const gch_histogram* h, size_t index, uint64_t* d, uint64_t* count);
GAPCHAMP_API uint64_t gch_histogram_count(const gch_histogram* h, uint64_t d);
/* "d,count" CSV, ascending d. */
GAPCHAMP_API gch_status gch_histogram_csv(const gch_histogram* h, char** out);

typedef struct gch_report gch_report;

GAPCHAMP_API gch_status gch_champions(uint64_t x, const gch_sieve_config* cfg, gch_report** out);
GAPCHAMP_API void gch_report_free(gch_report* r);
GAPCHAMP_API uint64_t gch_report_x(const gch_report* r);
GAPCHAMP_API uint64_t gch_report_n_star(const gch_report* r);
GAPCHAMP_API uint64_t gch_report_total_gaps(const gch_report* r);
GAPCHAMP_API size_t gch_report_champion_count(const gch_report* r);
GAPCHAMP_API uint64_t gch_report_champion(const gch_report* r, size_t index);
/* {"x", "n_star", "champions", "total_gaps"} */
GAPCHAMP_API gch_status gch_report_json(const gch_report* r, char** out);

GAPCHAMP_API gch_status gch_pi2(uint64_t x, uint64_t d, uint64_t* out);
GAPCHAMP_API gch_status gch_pi3(uint64_t x, uint64_t d, uint64_t d_prime, uint64_t* out);

/* ---- singular series ------------------------------------------------- */

typedef struct gch_series_value {
    double value;
    double error_bound;
    uint64_t truncation_prime;
} gch_series_value;

GAPCHAMP_API gch_status gch_twin_prime_constant(uint64_t truncation_prime, gch_series_value* out);
GAPCHAMP_API gch_status gch_singular_series(int64_t d, gch_series_value* out);
/* truncation_prime 0 selects the default, raised to cover delta's prime factors. */
GAPCHAMP_API gch_status gch_triple_singular_series(int64_t d_prime, int64_t d, uint64_t truncation_prime,
                                                   gch_series_value* out);
GAPCHAMP_API gch_status gch_nu_residues(const int64_t* offsets, size_t count, uint64_t p, unsigned* out);
/* {"value", "error_bound", "truncation_prime"} */
GAPCHAMP_API gch_status gch_series_json(const gch_series_value* v, char** out);

/* ---- primorials ------------------------------------------------------ */

GAPCHAMP_API gch_status gch_primorial(unsigned k, uint64_t* out);
GAPCHAMP_API gch_status gch_theta_characterization(double y, char** json_out);

/* ---- predictions ----------------------------------------------------- */

typedef enum gch_model { GCH_MODEL_ASYMPTOTIC = 0, GCH_MODEL_INTEGRAL = 1 } gch_model;

GAPCHAMP_API gch_status gch_predicted_count(uint64_t x, uint64_t d, gch_model model, double* out);
/* {"x", "d", "model", "predicted"} plus "observed" and "ratio" when
 * with_observed is nonzero. */
GAPCHAMP_API gch_status gch_predict_json(uint64_t x, uint64_t d, gch_model model, int with_observed,
                                         const gch_sieve_config* cfg, char** out);

/* ---- resumable champion runs ----------------------------------------- */

typedef struct gch_run gch_run;
typedef void (*gch_report_callback)(const char* report_json, void* user);

/* checkpoints may be NULL (geometric default schedule). checkpoint_path may
 * be NULL (no persistence); an existing file at the path is resumed. */
GAPCHAMP_API gch_status gch_run_create(uint64_t limit, const uint64_t* checkpoints, size_t checkpoint_count,
                                       const gch_sieve_config* cfg, const char* checkpoint_path, gch_run** out);
/* Replays stored reports, then sieves onward. max_batches 0 runs to the end;
 * batch_segments 0 uses 4 * worker_count segments per checkpoint write. */
GAPCHAMP_API gch_status gch_run_execute(gch_run* run, size_t max_batches, size_t batch_segments,
                                        gch_report_callback callback, void* user, int* finished);
GAPCHAMP_API gch_status gch_run_histogram_csv(const gch_run* run, char** out);
GAPCHAMP_API gch_status gch_run_reports_json(const gch_run* run, char** out);
GAPCHAMP_API gch_status gch_run_state_json(const gch_run* run, char** out);
GAPCHAMP_API void gch_run_free(gch_run* run);

/* ---- verification suites --------------------------------------------- */

/* suite: "table1" | "lemma1" | "sandwich" | "bounds". k and x of 0 select
 * suite defaults. *passed is 1 iff every check passed. */
GAPCHAMP_API gch_status gch_verify(const char* suite, unsigned k, uint64_t x, const gch_sieve_config* cfg,
                                   int* passed, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GAPCHAMP_H */
