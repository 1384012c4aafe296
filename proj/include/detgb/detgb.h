// Copyright 2026 The Authors.
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


/* C interface to the detgb kernel. All objects are opaque and owned by the
 * library; release them with the matching *_free function. Functions that
 * can fail return a detgb_status and, when err is not NULL, store a message
 * that must be released with detgb_string_free. */

#ifndef DETGB_DETGB_H_
#define DETGB_DETGB_H_

#include <stddef.h>

#if defined(DETGB_BUILDING_LIBRARY)
#define DETGB_API __attribute__((visibility("default")))
#else
#define DETGB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct detgb_matrix detgb_matrix;
typedef struct detgb_report detgb_report;

typedef enum detgb_status {
  DETGB_OK = 0,
  DETGB_INVALID = 1,
  DETGB_PARSE = 2,
  DETGB_IO = 3,
  DETGB_GUARDRAIL = 4,
  DETGB_PRECONDITION = 5,
  DETGB_INTERNAL = 6
} detgb_status;

typedef enum detgb_verdict {
  DETGB_PASS = 0,
  DETGB_FAIL = 1,
  DETGB_SKIPPED = 2,
  DETGB_PRECONDITION_FAILED = 3
} detgb_verdict;

DETGB_API const char* detgb_version(void);
DETGB_API const char* detgb_status_string(detgb_status status);

/* Matrix files are JSON objects; see the README for the keys. */
DETGB_API detgb_status detgb_matrix_from_file(const char* path, detgb_matrix** out, char** err);
DETGB_API detgb_status detgb_matrix_from_text(const char* json, detgb_matrix** out, char** err);
/* A built-in corpus entry by name. */
DETGB_API detgb_status detgb_matrix_from_corpus(const char* name, detgb_matrix** out, char** err);
/* grading: "column" or "row"; field: "q" or "fp:<prime>", NULL for fp:32003. */
DETGB_API detgb_status detgb_matrix_generic(int rows, int cols, const char* grading, const char* field,
                                            unsigned long long seed, detgb_matrix** out, char** err);
DETGB_API detgb_status detgb_matrix_variables(int rows, int cols, const char* field, detgb_matrix** out,
                                              char** err);
/* Replaces the field of a matrix loaded from a file, text or corpus entry. */
DETGB_API detgb_status detgb_matrix_set_field(detgb_matrix* matrix, const char* field, char** err);
DETGB_API int detgb_matrix_rows(const detgb_matrix* matrix);
DETGB_API int detgb_matrix_cols(const detgb_matrix* matrix);
/* JSON description of the matrix; release with detgb_string_free. */
DETGB_API char* detgb_matrix_to_text(const detgb_matrix* matrix);
DETGB_API void detgb_matrix_free(detgb_matrix* matrix);

/* Newline-separated corpus entry names; release with detgb_string_free. */
DETGB_API char* detgb_corpus_list(void);

/* command: gb, universal-check, initials, hilbert, gin, betti, matroid or
 * verify:<driver>. matrix may be NULL for commands that do not need one.
 * options_json may be NULL. Guardrail refusals are reported inside the
 * report as skipped claims, not as a failing status. */
DETGB_API detgb_status detgb_run(const char* command, const detgb_matrix* matrix, const char* options_json,
                                 detgb_report** out, char** err);
DETGB_API detgb_verdict detgb_report_verdict(const detgb_report* report);
/* Pretty-printed JSON with sorted keys; owned by the report. */
DETGB_API const char* detgb_report_json(const detgb_report* report);
/* Adds a "seconds" field to the report. */
DETGB_API void detgb_report_set_seconds(detgb_report* report, double seconds);
DETGB_API void detgb_report_free(detgb_report* report);

DETGB_API void detgb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* DETGB_DETGB_H_ */
