// Copyright 2026 The thompson-gradients Authors
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

#ifndef THOMPSON_THOMPSON_H
#define THOMPSON_THOMPSON_H

/* C interface to the F_{n,inf} toolkit. Every call returns th_status; on
 * failure th_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released
 * with th_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(THOMPSON_BUILDING_LIBRARY)
#define TH_API __attribute__((visibility("default")))
#else
#define TH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum th_status {
  TH_OK = 0,
  TH_INVALID_ARGUMENT = 1,
  TH_ARITY_MISMATCH = 2,
  TH_ZERO_CHARACTER = 3,
  TH_CONJECTURE_REQUIRED = 4,
  TH_RESOURCE_LIMIT = 5,
  TH_PRECONDITION = 6,
  TH_INVARIANT_VIOLATION = 7,
  TH_CHAIN_EXHAUSTED = 8,
  TH_SERIES_TOO_SHORT = 9,
  TH_INTERNAL = 10
} th_status;

typedef struct th_word th_word;
typedef struct th_character th_character;
typedef struct th_lattice th_lattice;

TH_API const char* th_status_name(th_status status);
TH_API const char* th_last_error(void);
TH_API void th_string_free(char* s);

/* Words: "x0 x1^-1 x3^2"; the empty string is the identity. */
TH_API th_status th_word_parse(int n, const char* text, th_word** out);
TH_API void th_word_free(th_word* w);
TH_API th_status th_word_to_string(const th_word* w, char** out);
TH_API th_status th_word_normal_form(const th_word* w, char** out);
TH_API th_status th_word_multiply(const th_word* a, const th_word* b, th_word** out);
TH_API th_status th_word_invert(const th_word* w, th_word** out);
TH_API th_status th_word_equal(const th_word* a, const th_word* b, int* out);
/* Equality decided through the piecewise-linear realization. */
TH_API th_status th_word_equal_pl(const th_word* a, const th_word* b, int* out);
TH_API th_status th_word_eval_pl_json(const th_word* w, char** out);

/* Characters: comma-separated rationals "a,b/c,...". */
TH_API th_status th_character_parse(int n, const char* text, th_character** out);
TH_API void th_character_free(th_character* c);
TH_API th_status th_sigma(const th_character* c, int m, int assume_conjecture, int* in_sigma);
/* Closure of [chi] under the automorphism matrices, as JSON. */
TH_API th_status th_orbit_json(const th_character* c, size_t cap, char** out);

/* Finiteness type of the preimage of the span of `rows` (row-major, n per row). */
TH_API th_status th_classify_kernel_json(int n, const char* rows, int m_max, int assume_conjecture,
                                         char** out);
/* which: "A" or "C". JSON {matrix, order, ...}. */
TH_API th_status th_auto_matrix_json(int n, const char* which, char** out);

/* Lattices: row-major integers spanning a full-rank sublattice of Z^n. */
TH_API th_status th_lattice_parse(int n, const char* rows, th_lattice** out);
TH_API void th_lattice_free(th_lattice* l);
TH_API th_status th_lattice_index(const th_lattice* l, int64_t* out);
TH_API th_status th_lattice_json(const th_lattice* l, char** out);
/* JSON list of row-major HNF bases, ordered by index. */
TH_API th_status th_subgroups_json(int n, int64_t max_index, size_t cap, char** out);
TH_API th_status th_cells_json(const th_lattice* l, size_t m, char** out);
/* has_d0 = 0 leaves the unknown constant symbolic. */
TH_API th_status th_bounds_json(const th_lattice* l, size_t max_chi_m, int has_d0, int64_t d0,
                                char** out);

/* kind: "rg", "dg" or "chi"; chain: "scaling:p", "coordinate:p", "explicit:...".
 * steps < 0 picks the default. format: "json" or "csv". */
TH_API th_status th_gradient(int n, const char* kind, size_t m, const char* chain, int steps,
                             int has_d0, int64_t d0, const char* format, char** out);
/* JSON {certified, firstS} for the same series at tolerance eps ("p/q"). */
TH_API th_status th_gradient_certify(int n, const char* kind, size_t m, const char* chain,
                                     int steps, const char* eps, char** out);

#ifdef __cplusplus
}
#endif

#endif
