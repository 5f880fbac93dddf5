/* Copyright 2025 The Authors.
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

/* C interface to the matroid1d library: opaque handles, status codes, and
 * JSON/text strings for structured results.  Strings returned through char**
 * are heap-allocated; release them with m1d_string_free.  On failure the
 * thread-local message from m1d_last_error describes what went wrong.
 */

#ifndef MATROID1D_MATROID1D_H_
#define MATROID1D_MATROID1D_H_

#ifdef __cplusplus
extern "C" {
#endif

typedef enum m1d_status {
  M1D_OK = 0,
  M1D_ERR_EMPTY_COMPLEX,
  M1D_ERR_GHOST_VERTEX,
  M1D_ERR_VERTEX_OUT_OF_RANGE,
  M1D_ERR_EMPTY_RESTRICTION,
  M1D_ERR_NOT_A_FACE,
  M1D_ERR_BAD_SKELETON_DIM,
  M1D_ERR_TOO_LARGE,
  M1D_ERR_WRONG_DIM,
  M1D_ERR_NOT_MATROID,
  M1D_ERR_BAD_COUNT,
  M1D_ERR_MALFORMED_HVECTOR,
  M1D_ERR_NOT_SQUAREFREE,
  M1D_ERR_DIM_TOO_HIGH,
  M1D_ERR_NOT_ARTINIAN,
  M1D_ERR_OVERFLOW,
  M1D_ERR_ASSERTION_FAILURE,
  M1D_ERR_BAD_INPUT,
  M1D_ERR_INTERNAL
} m1d_status;

typedef struct m1d_complex m1d_complex;
typedef struct m1d_ideal m1d_ideal;

enum { M1D_CHECK_DEFINITIONAL = 0, M1D_CHECK_FAST = 1 };
enum { M1D_MEMBER_CLOSED = 0, M1D_MEMBER_RECURSIVE = 1 };
enum { M1D_FORMAT_TEXT = 0, M1D_FORMAT_CSV = 1, M1D_FORMAT_JSON = 2 };

const char* m1d_status_name(m1d_status status);
const char* m1d_last_error(void);
void m1d_string_free(char* s);

/* ---- complexes ---- */

/* facet v of the complex: vertices facets[offsets[v]..offsets[v+1]) */
m1d_status m1d_complex_build(int n, const int* facet_vertices,
                             const int* facet_offsets, int facet_count,
                             m1d_complex** out);
m1d_status m1d_complex_from_json(const char* json_text, m1d_complex** out);
m1d_status m1d_complex_to_json(const m1d_complex* c, char** out);
void m1d_complex_free(m1d_complex* c);

m1d_status m1d_complex_dims(const m1d_complex* c, int* n, int* dim);
m1d_status m1d_is_pure(const m1d_complex* c, int* out);
/* vectors are written to out[0..cap), *len receives the true length */
m1d_status m1d_f_vector(const m1d_complex* c, long long* out, int cap, int* len);
m1d_status m1d_h_vector(const m1d_complex* c, long long* out, int cap, int* len);

m1d_status m1d_restrict(const m1d_complex* c, const int* vertices, int count,
                        m1d_complex** out, int* to_original, int map_cap);
m1d_status m1d_link(const m1d_complex* c, const int* face_vertices, int count,
                    m1d_complex** out, int* to_original, int map_cap);
m1d_status m1d_cone(const m1d_complex* c, m1d_complex** out);
m1d_status m1d_skeleton(const m1d_complex* c, int k, m1d_complex** out);
m1d_status m1d_cone_skeleton1(const m1d_complex* c, m1d_complex** out);

/* ---- matroid operations ---- */

m1d_status m1d_is_matroid(const m1d_complex* c, int mode, int* out);
m1d_status m1d_is_center(const m1d_complex* c, int v, int* out);
m1d_status m1d_partial_star(const m1d_complex* c, int v, int k,
                            m1d_complex** out);
/* parts: weakly decreasing positive integers */
m1d_status m1d_construct(const int* parts, int count, m1d_complex** out);
m1d_status m1d_extract_partition(const m1d_complex* c, int* parts, int cap,
                                 int* len);
m1d_status m1d_max_clique_size(const m1d_complex* c, int* out);
m1d_status m1d_is_shifted_class(const m1d_complex* c, int* out);
m1d_status m1d_iso_dim1(const m1d_complex* a, const m1d_complex* b, int* out);

/* JSON: partition, h-vector, matroid flag, degree sequence, clique data */
m1d_status m1d_classify(const m1d_complex* c, char** json_out);

/* ---- classification ---- */

m1d_status m1d_h_of_partition(const int* parts, int count, long long* out,
                              int cap, int* len);
/* h = (1, h1, h2); witnesses_json (optional, may be NULL) receives a JSON
 * array of partition strings in closed mode */
m1d_status m1d_member(long long h1, long long h2, int mode, int* member,
                      char** witnesses_json);
/* JSON: {"classes": "...", "distinct_hvectors": n, "labeled": "..."} with
 * arbitrary-precision counts rendered as strings */
m1d_status m1d_count(int n, char** json_out);
m1d_status m1d_table1(int max_n, int format, char** out);
m1d_status m1d_table2(int max_n, int format, char** out);
m1d_status m1d_hvector_sanity(const long long* h, int len, char** json_out);

/* ---- ideals ---- */

m1d_status m1d_stanley_reisner(const m1d_complex* c, m1d_ideal** out);
m1d_status m1d_witness_ideal(const int* parts, int count, m1d_ideal** out);
m1d_status m1d_ideal_from_json(const char* json_text, m1d_ideal** out);
m1d_status m1d_ideal_to_json(const m1d_ideal* ideal, char** out);
m1d_status m1d_ideal_to_text(const m1d_ideal* ideal, char** out);
void m1d_ideal_free(m1d_ideal* ideal);
m1d_status m1d_complex_from_ideal(const m1d_ideal* ideal, int max_dim,
                                  m1d_complex** out);
m1d_status m1d_hilbert_function(const m1d_ideal* ideal, long long* out, int cap,
                                int* len);
/* JSON: socle monomials, degrees, pure/level flags */
m1d_status m1d_socle_report(const m1d_ideal* ideal, char** json_out);

/* ---- oracle ---- */

m1d_status m1d_enumerate(int n, int include_labeled, char** json_out);
/* report_text gets the per-assertion crosscheck log */
m1d_status m1d_oracle(int n, char** report_text, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* MATROID1D_MATROID1D_H_ */
