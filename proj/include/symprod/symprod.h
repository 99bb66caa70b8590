// Copyright 2026 The symprod Authors
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
 * C interface to symprod: symmetric products of the line and of R^d, their
 * Hausdorff metric, the recursive bi-Lipschitz embedding, the Lipschitz
 * retraction, tomographic projections, cone metrics and distortion runs.
 *
 * Conventions
 *   - Every fallible call returns a symprod_status; SYMPROD_OK is 0.
 *   - symprod_last_error() describes the most recent failure on the calling
 *     thread.
 *   - Objects are opaque handles released with their *_destroy function.
 *   - Strings returned through char** are owned by the caller and released
 *     with symprod_string_free.
 *   - Report strings are JSON documents; identical inputs and seeds give
 *     byte-identical output.
 */

#ifndef SYMPROD_SYMPROD_H_
#define SYMPROD_SYMPROD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(SYMPROD_BUILDING_LIBRARY)
#define SYMPROD_API __attribute__((visibility("default")))
#else
#define SYMPROD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symprod_status {
  SYMPROD_OK = 0,
  SYMPROD_ERR_EMPTY_INPUT = 1,
  SYMPROD_ERR_NON_FINITE = 2,
  SYMPROD_ERR_DIMENSION_MISMATCH = 3,
  SYMPROD_ERR_NEGATIVE_PARAMETER = 4,
  SYMPROD_ERR_DIAMETER_VIOLATION = 5,
  SYMPROD_ERR_CAPACITY_EXCEEDED = 6,
  SYMPROD_ERR_BAD_RANGE = 7,
  SYMPROD_ERR_NON_UNIT_DIRECTION = 8,
  SYMPROD_ERR_DEGENERATE_FAMILY = 9,
  SYMPROD_ERR_PRECONDITION = 10,
  SYMPROD_ERR_DECOMPOSITION_FAILED = 11,
  SYMPROD_ERR_DEGENERATE_SAMPLE = 12,
  SYMPROD_ERR_OVERFLOW = 13,
  SYMPROD_ERR_PARSE = 14,
  SYMPROD_ERR_SCHEMA = 15,
  SYMPROD_ERR_BUFFER_TOO_SMALL = 100,
  SYMPROD_ERR_NULL_ARGUMENT = 101,
  SYMPROD_ERR_INTERNAL = 102
} symprod_status;

typedef struct symprod_pointset symprod_pointset;
typedef struct symprod_pipeline symprod_pipeline;

SYMPROD_API const char* symprod_last_error(void);
SYMPROD_API const char* symprod_status_name(symprod_status status);
SYMPROD_API void symprod_string_free(char* text);

/* ---- point sets ------------------------------------------------------- */

/* coords holds count points of dimension dim, row-major. The set is
 * canonicalized (sorted, exact duplicates removed). */
SYMPROD_API symprod_status symprod_pointset_create(const double* coords, size_t count,
                                                   size_t dim, symprod_pointset** out);
/* {"dim": d, "points": [[...], ...]} */
SYMPROD_API symprod_status symprod_pointset_from_json(const char* json, symprod_pointset** out);
SYMPROD_API symprod_status symprod_pointset_to_json(const symprod_pointset* set, char** json);
SYMPROD_API void symprod_pointset_destroy(symprod_pointset* set);
SYMPROD_API size_t symprod_pointset_size(const symprod_pointset* set);
SYMPROD_API size_t symprod_pointset_dim(const symprod_pointset* set);
/* Copies size*dim coordinates; fails with BUFFER_TOO_SMALL otherwise. */
SYMPROD_API symprod_status symprod_pointset_coords(const symprod_pointset* set, double* out,
                                                   size_t capacity);

SYMPROD_API symprod_status symprod_hausdorff(const symprod_pointset* a, const symprod_pointset* b,
                                             double* out);

/* ---- retraction (subsets of R) ---------------------------------------- */

SYMPROD_API symprod_status symprod_min_gap(const symprod_pointset* set, size_t n, double* delta);
SYMPROD_API symprod_status symprod_retract_once(const symprod_pointset* set, size_t n,
                                                symprod_pointset** out);
SYMPROD_API symprod_status symprod_retract_to(const symprod_pointset* set, size_t n, size_t k,
                                              symprod_pointset** out);
/* Batch: point-set document or array in, array of point sets out. */
SYMPROD_API symprod_status symprod_retract_json(const char* input_json, size_t n, size_t k,
                                                char** output_json);

/* ---- embedding --------------------------------------------------------- */

/* 2 floor((e-1) n!), n in [1, 12]. */
SYMPROD_API symprod_status symprod_dimension(int n, uint64_t* out);
SYMPROD_API symprod_status symprod_pipeline_create(int n, symprod_pipeline** out);
SYMPROD_API void symprod_pipeline_destroy(symprod_pipeline* pipeline);
SYMPROD_API int symprod_pipeline_capacity(const symprod_pipeline* pipeline);
SYMPROD_API size_t symprod_pipeline_output_dim(const symprod_pipeline* pipeline);
SYMPROD_API symprod_status symprod_pipeline_embed(const symprod_pipeline* pipeline,
                                                  const symprod_pointset* set, double* out,
                                                  size_t capacity);
/* Stage tree, dimensions, per-stage constants and certified flags. */
SYMPROD_API symprod_status symprod_pipeline_describe(const symprod_pipeline* pipeline,
                                                     char** json);
/* *has_lower is 0 when some stage's lower constant is only empirical. */
SYMPROD_API symprod_status symprod_pipeline_certified_bounds(const symprod_pipeline* pipeline,
                                                             double* lower, int* has_lower,
                                                             double* upper);
/* Batch: point-set array in, [{"input": ..., "vector": [...]}, ...] out. */
SYMPROD_API symprod_status symprod_embed_json(const symprod_pipeline* pipeline,
                                              const char* input_json, char** output_json);

/* (R^d)^(n), d in {2,3}, n in [1,4]. */
SYMPROD_API symprod_status symprod_embed_rd_dimension(int n, int d, uint64_t* out);
SYMPROD_API symprod_status symprod_embed_rd_json(int n, int d, const char* input_json,
                                                 char** output_json);

/* ---- verification runs -------------------------------------------------- */
/* *passed is set to 1 when every checked invariant held, 0 otherwise. */

/* Separation certificate {dim, capacity, directions, M, method, ...}. */
SYMPROD_API symprod_status symprod_tomo_certify(size_t q, size_t d, char** certificate_json);
/* Projections of each input set (dimension d, at most q points) along the
 * family's q+1 lines. */
SYMPROD_API symprod_status symprod_project_json(size_t q, size_t d, const char* input_json,
                                                char** output_json);
SYMPROD_API symprod_status symprod_tomo_verify(const char* certificate_json, uint64_t pairs,
                                               uint64_t search_iterations, uint64_t seed,
                                               char** report_json, int* passed);

/* space_json: point-set document (diameter <= 2) or NULL for a random ball
 * sample of `points` points in R^3. origin indexes the canonical order. */
SYMPROD_API symprod_status symprod_cone_check(const char* space_json, size_t origin,
                                              size_t points, uint64_t pairs, uint64_t seed,
                                              char** report_json, int* passed);

/* map: "embed", "retract", "tomo" or "circle". csv_out may be NULL; when not,
 * it receives "domain_distance,image_distance" rows. */
SYMPROD_API symprod_status symprod_distortion_run(const char* map, int n, int d,
                                                  uint64_t samples, uint64_t search_iterations,
                                                  double step, uint64_t seed,
                                                  char** report_json, char** csv_out,
                                                  int* passed);

/* SampledMap JSON on a sphere grid in, extension summary out. */
SYMPROD_API symprod_status symprod_ball_extension_json(const char* map_json, size_t n,
                                                       size_t radial_steps, int include_map,
                                                       char** output_json);

#ifdef __cplusplus
}
#endif

#endif /* SYMPROD_SYMPROD_H_ */
