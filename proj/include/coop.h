/* Copyright 2026 The coopgames authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the coopgames shared library.
 *
 * Games are opaque handles created from / rendered to the JSON game format:
 *   {"players": ["a1","a2"], "grounded": true,
 *    "values": {"a1": "1", "a2": "1", "a1,a2": "3"}}
 * Values are exact rational strings; omitted coalitions default to "0".
 *
 * Every function returns COOP_OK (0) on success or a nonzero error code;
 * coop_last_error() describes the most recent failure on this thread.
 * Strings returned through char** are owned by the caller and must be
 * released with coop_string_free().
 */

#ifndef COOP_H
#define COOP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define COOP_API_VERSION 1

typedef struct coop_game coop_game;

enum coop_status {
    COOP_OK = 0,
    COOP_ERR_PARSE = 1,
    COOP_ERR_DUPLICATE_LABEL = 2,
    COOP_ERR_UNKNOWN_PLAYER = 3,
    COOP_ERR_UNKNOWN_PLAYER_IN_COALITION = 4,
    COOP_ERR_NONZERO_EMPTY_SET_WHEN_GROUNDED = 5,
    COOP_ERR_UNPARSABLE_RATIONAL = 6,
    COOP_ERR_EMPTY_SUPPORT = 7,
    COOP_ERR_EMPTY_SUPPORT_FOR_GROUNDED_GAME = 8,
    COOP_ERR_NEGATIVE_WEIGHT = 9,
    COOP_ERR_EMPTY_DERIVATIVE_SET = 10,
    COOP_ERR_NOT_A_PERMUTATION = 11,
    COOP_ERR_INDEX_OUT_OF_RANGE = 12,
    COOP_ERR_LABEL_COLLISION = 13,
    COOP_ERR_ARITY_MISMATCH = 14,
    COOP_ERR_NOT_SIMPLE = 15,
    COOP_ERR_NOT_MONOTONE = 16,
    COOP_ERR_NOT_NORMALIZED = 17,
    COOP_ERR_BAD_K = 18,
    COOP_ERR_SIZE_CAP = 19,
    COOP_ERR_NEGATIVE_GAME = 20,
    COOP_ERR_NOT_CONVEX = 21,
    COOP_ERR_DIMENSION_MISMATCH = 22,
    COOP_ERR_VARIABLE_COLLISION = 23,
    COOP_ERR_MALFORMED_PROGRAM = 24,
    COOP_ERR_INTERNAL = 25
};

int coop_api_version(void);

/* Most recent error message on the calling thread; never NULL. */
const char* coop_last_error(void);

void coop_string_free(char* s);
void coop_game_free(coop_game* g);

/* --- construction and serialization ---------------------------------- */

int coop_game_parse(const char* json_text, coop_game** out);
int coop_game_to_json(const coop_game* g, char** json_out);
int coop_game_player_count(const coop_game* g, int* out);

/* labels_csv: comma-joined labels ("1,2,3"); coalition_csv likewise. */
int coop_game_unanimity(const char* labels_csv, const char* coalition_csv, coop_game** out);
int coop_game_dirac(const char* labels_csv, const char* coalition_csv, int grounded,
                    coop_game** out);
/* weights_csv: rational strings ("1,1,1"); default labels "1".."n". */
int coop_game_weighted_majority(const char* weights_csv, const char* quota, coop_game** out);

/* --- composition ------------------------------------------------------ */

int coop_compose_at(const coop_game* host, const char* player, const coop_game* guest,
                    coop_game** out);
int coop_compose_total(const coop_game* quotient, const coop_game* const* components,
                       size_t count, coop_game** out);

/* --- transforms ------------------------------------------------------- */

/* kind: "mobius" | "zeta" | "dual" | "derivative" (needs player).
 * Accepts game JSON, or unanimity-coefficient JSON ({"coeffs": ...}) for
 * "zeta"; "mobius" emits coefficient JSON, the others emit game JSON. */
int coop_transform_json(const char* input_json, const char* kind, const char* player,
                        char** output_json);

/* --- analysis and solutions ------------------------------------------ */

/* Class-membership report with witnesses, as JSON. kmax bounds the
 * k-monotone / k-alternating scans (pass 0 for the default). */
int coop_analyze(const coop_game* g, int kmax, char** json_out);

/* solution: "shapley" | "banzhaf" | "core" | "imputations". */
int coop_solve(const coop_game* g, const char* solution, char** json_out);

/* --- generator decomposition ----------------------------------------- */

/* Writes u_S on n players over the generators; returns the s-expression
 * and (optionally) the evaluated game. coalition_csv uses labels "1".."n". */
int coop_decompose(int n, const char* coalition_csv, char** sexpr_out, coop_game** game_out);

/* --- verification suites ---------------------------------------------- */

/* suite: "axioms" | "closure" | "duality" | "mobius" | "shapley-composite"
 *        | "banzhaf-composite" | "core-tensor".
 * klass restricts the closure suite (may be NULL); k is the order for the
 * k-indexed classes (pass 0 for the default). Writes a JSON report and
 * sets *hard_pass to 0/1; "banzhaf-composite" is report-only and always
 * passes. */
int coop_verify(const char* suite, int trials, uint64_t seed, const char* klass, int k,
                char** report_json, int* hard_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COOP_H */
