// Copyright 2026 The Zequa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the zequa library.
 *
 * Subspaces and reports are opaque handles owned by the caller and released
 * with the matching *_free function. Every call returns a zq_status; on
 * failure zq_last_error() describes the cause (thread-local, valid until the
 * next call on the same thread). Reports carry a JSON payload and a pass
 * flag that is false when a certificate or claimed property failed its
 * re-verification. */

#ifndef ZEQUA_ZEQUA_H_
#define ZEQUA_ZEQUA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ZQ_BUILDING_LIBRARY)
#define ZQ_API __attribute__((visibility("default")))
#else
#define ZQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct zq_subspace zq_subspace;
typedef struct zq_report zq_report;

typedef enum zq_status {
  ZQ_OK = 0,
  ZQ_ERR_ARGUMENT = 1,     /* null pointer or out-of-range argument */
  ZQ_ERR_DIMENSION = 2,
  ZQ_ERR_SIZE = 3,         /* dimension cap exceeded */
  ZQ_ERR_NUMERIC = 4,
  ZQ_ERR_CHANNEL = 5,
  ZQ_ERR_PRECONDITION = 6,
  ZQ_ERR_PARSE = 7,
  ZQ_ERR_CORRUPT = 8,
  ZQ_ERR_IO = 9,
  ZQ_ERR_VERIFICATION = 10, /* invalid codeword */
  ZQ_ERR_INTERNAL = 11
} zq_status;

typedef struct zq_config {
  uint64_t seed;
  size_t restarts;
  size_t max_iters;
  double tol;
  size_t max_dim; /* cap on ambient dimensions of built and combined spaces */
} zq_config;

ZQ_API const char* zq_version(void);
ZQ_API const char* zq_status_string(zq_status status);
ZQ_API const char* zq_last_error(void);

/* seed 0, 256 restarts, 5000 iterations, tol 1e-7, max_dim 64. */
ZQ_API void zq_config_init(zq_config* cfg);

/* Subspaces. `cfg` may be NULL for defaults. */
ZQ_API zq_status zq_subspace_from_name(const char* name, const zq_config* cfg,
                                       zq_subspace** out);
/* `entries` holds `count` row-major rows x cols matrices as interleaved
 * (re, im) pairs. */
ZQ_API zq_status zq_subspace_from_spanning(size_t rows, size_t cols, size_t count,
                                           const double* entries, zq_subspace** out);
ZQ_API zq_status zq_subspace_load(const char* path, zq_subspace** out);
ZQ_API zq_status zq_subspace_parse(const char* text, zq_subspace** out);
ZQ_API zq_status zq_subspace_save(const zq_subspace* s, const char* path,
                                  const char* name);
ZQ_API void zq_subspace_free(zq_subspace* s);
ZQ_API size_t zq_subspace_rows(const zq_subspace* s);
ZQ_API size_t zq_subspace_cols(const zq_subspace* s);
ZQ_API size_t zq_subspace_dim(const zq_subspace* s);
/* Copies basis element k into `entries` (rows * cols interleaved pairs). */
ZQ_API zq_status zq_subspace_basis(const zq_subspace* s, size_t k, double* entries);
ZQ_API zq_status zq_subspace_complement(const zq_subspace* s, zq_subspace** out);
ZQ_API zq_status zq_subspace_tensor(const zq_subspace* a, const zq_subspace* b,
                                    const zq_config* cfg, zq_subspace** out);

/* Reports. */
ZQ_API const char* zq_report_json(const zq_report* r);
ZQ_API int zq_report_passed(const zq_report* r);
ZQ_API void zq_report_free(zq_report* r);

/* Operations. `cfg` may be NULL for defaults. */
ZQ_API zq_status zq_describe(const zq_subspace* s, zq_report** out);
ZQ_API zq_status zq_graph_check(const zq_subspace* s, zq_report** out);
/* Searches `s` itself, or its complement when `complement` is nonzero. */
ZQ_API zq_status zq_rank_one(const zq_subspace* s, int complement, const zq_config* cfg,
                             zq_report** out);
/* power 1 is the one-shot bound; power k > 1 the k-fold tensor power. */
ZQ_API zq_status zq_capacity(const zq_subspace* s, size_t power, const zq_config* cfg,
                             zq_report** out);
ZQ_API zq_status zq_activation(const zq_subspace* s, const zq_subspace* t,
                               const zq_config* cfg, zq_report** out);
ZQ_API zq_status zq_lemma5(const zq_subspace* s, const zq_subspace* t,
                           const zq_config* cfg, zq_report** out);
ZQ_API zq_status zq_family(int m, int verify_all, const zq_config* cfg, zq_report** out);
ZQ_API zq_status zq_suite_qubit(const zq_config* cfg, zq_report** out);
ZQ_API zq_status zq_corpus_save(const char* dir, zq_report** out);
ZQ_API zq_status zq_corpus_load(const char* dir, zq_report** out);

#ifdef __cplusplus
}
#endif

#endif /* ZEQUA_ZEQUA_H_ */
