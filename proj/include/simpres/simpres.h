/* Copyright (C) 2026 The simpres Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef SIMPRES_H
#define SIMPRES_H

/* C interface to simpres. Every handle is opaque and owned by the caller,
 * who releases it with the matching *_free function. Functions return a
 * simpres_status; on failure simpres_last_error() describes the problem
 * (thread-local, valid until the next call on the same thread). */

#include <stddef.h>

#if defined(_WIN32)
#define SIMPRES_API __declspec(dllexport)
#else
#define SIMPRES_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum simpres_status {
  SIMPRES_OK = 0,
  SIMPRES_ERR_PARSE = 1,
  SIMPRES_ERR_VALIDATION = 2,
  SIMPRES_ERR_DOMAIN = 3,
  SIMPRES_ERR_INFEASIBLE = 4,
  SIMPRES_ERR_CONSTRUCTION = 5,
  SIMPRES_ERR_ARGUMENT = 6,
  SIMPRES_ERR_INTERNAL = 7
} simpres_status;

typedef enum simpres_theory {
  SIMPRES_THEORY_DEFAULT = 0,
  SIMPRES_THEORY_HOCHSCHILD = 1,
  SIMPRES_THEORY_SECONDARY = 2
} simpres_theory;

/* Process exit codes used by the command runners. */
#define SIMPRES_EXIT_OK 0
#define SIMPRES_EXIT_FAILURE 1
#define SIMPRES_EXIT_USAGE 2

typedef struct simpres_options simpres_options;
typedef struct simpres_document simpres_document;
typedef struct simpres_result simpres_result;

SIMPRES_API const char* simpres_version(void);
SIMPRES_API const char* simpres_last_error(void);
SIMPRES_API const char* simpres_status_name(simpres_status s);

/* The global sign s in dH + Hd = s (GF - id). */
SIMPRES_API int simpres_chain_homotopy_sign(void);
/* Reruns the sign calibration fixture. */
SIMPRES_API simpres_status simpres_calibrate_chain_homotopy_sign(int* sign);

SIMPRES_API simpres_status simpres_options_new(simpres_options** out);
SIMPRES_API void simpres_options_free(simpres_options* o);
SIMPRES_API simpres_status simpres_options_set_theory(simpres_options* o, simpres_theory t);
SIMPRES_API simpres_status simpres_options_set_coefficients(simpres_options* o, const char* name);
SIMPRES_API simpres_status simpres_options_set_max_degree(simpres_options* o, size_t n);
SIMPRES_API simpres_status simpres_options_set_oracle(simpres_options* o, int enabled);
/* 0 restores the default (SIMPRES_DIM_CAP, else 2^20). */
SIMPRES_API simpres_status simpres_options_set_dim_cap(simpres_options* o, size_t cap);

SIMPRES_API simpres_status simpres_document_load(const char* path, simpres_document** out);
SIMPRES_API simpres_status simpres_document_parse(const char* json_text, const char* name,
                                                  simpres_document** out);
SIMPRES_API void simpres_document_free(simpres_document* d);
SIMPRES_API const char* simpres_document_name(const simpres_document* d);

/* command: "check", "homology", "cohomology" or "homotopy-verify". These
 * return SIMPRES_OK whenever a result was produced; problems with the input
 * are reported through the result's exit code and messages. options may be
 * NULL. */
SIMPRES_API simpres_status simpres_run_file(const char* command, const char* path,
                                            const simpres_options* o, simpres_result** out);
SIMPRES_API simpres_status simpres_run_document(const char* command, const simpres_document* d,
                                                const simpres_options* o, simpres_result** out);

SIMPRES_API void simpres_result_free(simpres_result* r);
SIMPRES_API int simpres_result_exit_code(const simpres_result* r);
SIMPRES_API const char* simpres_result_status(const simpres_result* r);
/* Owned by the result. */
SIMPRES_API const char* simpres_result_tsv(const simpres_result* r);
SIMPRES_API const char* simpres_result_json(const simpres_result* r);
SIMPRES_API size_t simpres_result_message_count(const simpres_result* r);
SIMPRES_API const char* simpres_result_message(const simpres_result* r, size_t k);
/* Rows of the "betti" section. */
SIMPRES_API size_t simpres_result_degree_count(const simpres_result* r);
/* column: "betti", "dim", "oracle", "source" or "target". */
SIMPRES_API simpres_status simpres_result_value(const simpres_result* r, const char* column,
                                                size_t degree, size_t* value);
/* Number of failed check instances over all families. */
SIMPRES_API size_t simpres_result_failure_count(const simpres_result* r);

#ifdef __cplusplus
}
#endif

#endif /* SIMPRES_H */
