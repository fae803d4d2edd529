/*
 * Copyright 2026 The charmean Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


/* C interface to the charmean library. Every function returns a cm_status;
 * on failure cm_last_error() describes the cause for the calling thread. */

#ifndef CHARMEAN_CHARMEAN_H
#define CHARMEAN_CHARMEAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(CHARMEAN_BUILDING_LIBRARY)
#define CM_API __attribute__((visibility("default")))
#else
#define CM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cm_status {
  CM_OK = 0,
  CM_ERR_DOMAIN = 1,   /* argument outside the mathematical domain */
  CM_ERR_ARGUMENT = 2, /* malformed argument, null pointer, unknown name */
  CM_ERR_IO = 3,
  CM_ERR_INTERNAL = 4
} cm_status;

typedef enum cm_tau_path { CM_TAU_STRUCTURAL = 0, CM_TAU_DIRECT = 1 } cm_tau_path;

typedef enum cm_lemma_kind { CM_LEMMA5 = 0, CM_LEMMA6 = 1, CM_LEMMA7 = 2, CM_REF7 = 3 } cm_lemma_kind;

typedef struct cm_group cm_group;

typedef struct cm_options {
  int threads; /* 0: CHARMEAN_THREADS, then hardware concurrency */
  cm_tau_path tau_path;
} cm_options;

typedef struct cm_character_info {
  uint64_t index;
  uint64_t conductor;
  uint64_t order;
  int primitive;
  int principal;
} cm_character_info;

typedef struct cm_tau_row {
  uint64_t index;
  double tau_re;
  double tau_im;
  double abs_direct;
  double abs_fast;
} cm_tau_row;

typedef struct cm_l_value {
  double re;
  double im;
  double abs_error_estimate;
} cm_l_result;

typedef struct cm_mean_value {
  uint64_t q;
  uint64_t M;
  uint64_t N;
  double m;
  double a;
  double lhs;
  double main;
  double abs_err;
  double rel_err;
  double norm_err;
  double seconds;
} cm_mean_value;

typedef struct cm_lemma_report {
  cm_lemma_kind which;
  uint64_t q;
  uint64_t d;
  double m;
  double a;
  double lhs_re;
  double lhs_im;
  double main;
  double main_literal; /* NaN except for CM_LEMMA5 */
  double abs_err;
  double rel_err;
  double error_scale;
} cm_lemma_report;

typedef struct cm_probe_candidate {
  const char* name; /* static storage */
  double main;
  double rel_err;
} cm_probe_candidate;

typedef struct cm_probe_report {
  uint64_t q;
  uint64_t M;
  uint64_t N;
  double m;
  double a;
  double lhs;
  cm_probe_candidate candidates[3];
  int verdict; /* index into candidates, -1 when inconclusive */
} cm_probe_report;

typedef struct cm_decomposition {
  double c_re[4];
  double c_im[4];
  double a;
  double recombined;
} cm_decomposition;

CM_API const char* cm_version(void);
CM_API const char* cm_last_error(void);
CM_API unsigned cm_resolve_threads(int requested);

CM_API cm_status cm_is_prime(uint64_t n, int* out);
CM_API cm_status cm_split_mn(uint64_t q, uint64_t* m_part, uint64_t* n_part);

CM_API cm_status cm_group_create(uint64_t q, cm_group** out);
CM_API void cm_group_destroy(cm_group* group);
CM_API uint64_t cm_group_modulus(const cm_group* group);
CM_API uint64_t cm_group_size(const cm_group* group);
/* Number of cyclic components; exponents of a character have this length. */
CM_API size_t cm_group_rank(const cm_group* group);

CM_API cm_status cm_character_info_get(const cm_group* group, uint64_t index, cm_character_info* out);
CM_API cm_status cm_character_exponents(const cm_group* group, uint64_t index, uint64_t* out, size_t capacity);
CM_API cm_status cm_character_value(const cm_group* group, uint64_t index, int64_t n, double* re, double* im);

CM_API cm_status cm_gauss_sum(const cm_group* group, uint64_t index, int64_t m, double* re, double* im);
/* Writes cm_group_size() rows. */
CM_API cm_status cm_tau_table(const cm_group* group, int threads, cm_tau_row* rows, size_t capacity);
/* L(1, chi, a) by the digamma closed form. */
CM_API cm_status cm_l_value(const cm_group* group, uint64_t index, double a, cm_l_result* out);

CM_API cm_status cm_mean_value_compute(uint64_t q, double m, double a, const cm_options* options, cm_mean_value* out);
/* d is ignored for CM_LEMMA5 and CM_REF7; m is used only by CM_LEMMA5. */
CM_API cm_status cm_lemma(cm_lemma_kind which, uint64_t q, uint64_t d, double m, double a, const cm_options* options,
                          cm_lemma_report* out);
CM_API cm_status cm_probe(uint64_t q, double m, double a, const cm_options* options, cm_probe_report* out);
CM_API cm_status cm_decompose(uint64_t q, double m, double a, const cm_options* options, cm_decomposition* out);

/* Runs a verification suite ("identities", "lemmas", "special"). *json is a
 * report to release with cm_string_free; *passed is 1 with no violations. */
CM_API cm_status cm_verify(const char* suite, uint64_t qmax, int threads, char** json, int* passed);
CM_API void cm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CHARMEAN_CHARMEAN_H */
