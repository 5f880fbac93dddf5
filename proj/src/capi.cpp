// Copyright 2025 The Authors.
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

#include "matroid1d/matroid1d.h"

#include <cstring>
#include <string>
#include <vector>

#include "matroid1d/classification.hpp"
#include "matroid1d/complex.hpp"
#include "matroid1d/ideals.hpp"
#include "matroid1d/matroid.hpp"
#include "matroid1d/oracle.hpp"
#include "matroid1d/partition.hpp"

using namespace matroid1d;

struct m1d_complex {
  SimplicialComplex value;
};

struct m1d_ideal {
  MonomialIdeal value;
};

namespace {

thread_local std::string g_last_error;

m1d_status status_of(Errc code) {
  switch (code) {
    case Errc::ok: return M1D_OK;
    case Errc::empty_complex: return M1D_ERR_EMPTY_COMPLEX;
    case Errc::ghost_vertex: return M1D_ERR_GHOST_VERTEX;
    case Errc::vertex_out_of_range: return M1D_ERR_VERTEX_OUT_OF_RANGE;
    case Errc::empty_restriction: return M1D_ERR_EMPTY_RESTRICTION;
    case Errc::not_a_face: return M1D_ERR_NOT_A_FACE;
    case Errc::bad_skeleton_dim: return M1D_ERR_BAD_SKELETON_DIM;
    case Errc::too_large: return M1D_ERR_TOO_LARGE;
    case Errc::wrong_dim: return M1D_ERR_WRONG_DIM;
    case Errc::not_matroid: return M1D_ERR_NOT_MATROID;
    case Errc::bad_count: return M1D_ERR_BAD_COUNT;
    case Errc::malformed_hvector: return M1D_ERR_MALFORMED_HVECTOR;
    case Errc::not_squarefree: return M1D_ERR_NOT_SQUAREFREE;
    case Errc::dim_too_high: return M1D_ERR_DIM_TOO_HIGH;
    case Errc::not_artinian: return M1D_ERR_NOT_ARTINIAN;
    case Errc::overflow: return M1D_ERR_OVERFLOW;
    case Errc::assertion_failure: return M1D_ERR_ASSERTION_FAILURE;
    case Errc::bad_input: return M1D_ERR_BAD_INPUT;
    case Errc::internal: return M1D_ERR_INTERNAL;
  }
  return M1D_ERR_INTERNAL;
}

template <typename Fn>
m1d_status guarded(Fn&& fn) {
  try {
    fn();
    return M1D_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return M1D_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void write_vector(const std::vector<long long>& v, long long* out, int cap,
                  int* len) {
  if (len) *len = static_cast<int>(v.size());
  if (static_cast<int>(v.size()) > cap)
    fail(Errc::bad_input, "output buffer too small");
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
}

Partition partition_from(const int* parts, int count) {
  if (!parts || count < 1) fail(Errc::bad_input, "empty partition");
  return Partition(std::vector<int>(parts, parts + count));
}

Mask mask_from(const m1d_complex* c, const int* vertices, int count) {
  Mask m = 0;
  for (int i = 0; i < count; ++i) {
    const int v = vertices[i];
    if (v < 1 || v > c->value.vertex_count())
      fail(Errc::vertex_out_of_range, "vertex out of range");
    m |= vertex_bit(v);
  }
  return m;
}

void write_map(const std::vector<int>& map, int* out, int cap) {
  if (!out) return;
  if (static_cast<int>(map.size()) > cap)
    fail(Errc::bad_input, "label map buffer too small");
  for (size_t i = 0; i < map.size(); ++i) out[i] = map[i];
}

}  // namespace

extern "C" {

const char* m1d_status_name(m1d_status status) {
  switch (status) {
    case M1D_OK: return "ok";
    case M1D_ERR_EMPTY_COMPLEX: return "EmptyComplex";
    case M1D_ERR_GHOST_VERTEX: return "GhostVertex";
    case M1D_ERR_VERTEX_OUT_OF_RANGE: return "VertexOutOfRange";
    case M1D_ERR_EMPTY_RESTRICTION: return "EmptyRestriction";
    case M1D_ERR_NOT_A_FACE: return "NotAFace";
    case M1D_ERR_BAD_SKELETON_DIM: return "BadSkeletonDim";
    case M1D_ERR_TOO_LARGE: return "TooLarge";
    case M1D_ERR_WRONG_DIM: return "WrongDim";
    case M1D_ERR_NOT_MATROID: return "NotMatroid";
    case M1D_ERR_BAD_COUNT: return "BadCount";
    case M1D_ERR_MALFORMED_HVECTOR: return "MalformedHVector";
    case M1D_ERR_NOT_SQUAREFREE: return "NotSquarefree";
    case M1D_ERR_DIM_TOO_HIGH: return "DimTooHigh";
    case M1D_ERR_NOT_ARTINIAN: return "NotArtinian";
    case M1D_ERR_OVERFLOW: return "Overflow";
    case M1D_ERR_ASSERTION_FAILURE: return "AssertionFailure";
    case M1D_ERR_BAD_INPUT: return "BadInput";
    case M1D_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* m1d_last_error(void) { return g_last_error.c_str(); }

void m1d_string_free(char* s) { std::free(s); }

m1d_status m1d_complex_build(int n, const int* facet_vertices,
                             const int* facet_offsets, int facet_count,
                             m1d_complex** out) {
  return guarded([&] {
    if (!facet_vertices || !facet_offsets || !out)
      fail(Errc::bad_input, "null argument");
    std::vector<std::vector<int>> facets;
    for (int f = 0; f < facet_count; ++f)
      facets.emplace_back(facet_vertices + facet_offsets[f],
                          facet_vertices + facet_offsets[f + 1]);
    *out = new m1d_complex{SimplicialComplex::build(n, facets)};
  });
}

m1d_status m1d_complex_from_json(const char* json_text, m1d_complex** out) {
  return guarded([&] {
    if (!json_text || !out) fail(Errc::bad_input, "null argument");
    *out = new m1d_complex{complex_from_json_text(json_text)};
  });
}

m1d_status m1d_complex_to_json(const m1d_complex* c, char** out) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    *out = copy_string(complex_to_json(c->value).dump());
  });
}

void m1d_complex_free(m1d_complex* c) { delete c; }

m1d_status m1d_complex_dims(const m1d_complex* c, int* n, int* dim) {
  return guarded([&] {
    if (!c) fail(Errc::bad_input, "null argument");
    if (n) *n = c->value.vertex_count();
    if (dim) *dim = c->value.dim();
  });
}

m1d_status m1d_is_pure(const m1d_complex* c, int* out) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    *out = c->value.is_pure() ? 1 : 0;
  });
}

m1d_status m1d_f_vector(const m1d_complex* c, long long* out, int cap,
                        int* len) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    write_vector(c->value.f_vector().entries(), out, cap, len);
  });
}

m1d_status m1d_h_vector(const m1d_complex* c, long long* out, int cap,
                        int* len) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    write_vector(c->value.h_vector().entries(), out, cap, len);
  });
}

m1d_status m1d_restrict(const m1d_complex* c, const int* vertices, int count,
                        m1d_complex** out, int* to_original, int map_cap) {
  return guarded([&] {
    if (!c || !vertices || !out) fail(Errc::bad_input, "null argument");
    Relabeled r = restrict_to(c->value, mask_from(c, vertices, count));
    write_map(r.to_original, to_original, map_cap);
    *out = new m1d_complex{std::move(r.complex)};
  });
}

m1d_status m1d_link(const m1d_complex* c, const int* face_vertices, int count,
                    m1d_complex** out, int* to_original, int map_cap) {
  return guarded([&] {
    if (!c || !out || (count > 0 && !face_vertices))
      fail(Errc::bad_input, "null argument");
    Relabeled r = link_of(c->value, mask_from(c, face_vertices, count));
    write_map(r.to_original, to_original, map_cap);
    *out = new m1d_complex{std::move(r.complex)};
  });
}

m1d_status m1d_cone(const m1d_complex* c, m1d_complex** out) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    *out = new m1d_complex{cone(c->value)};
  });
}

m1d_status m1d_skeleton(const m1d_complex* c, int k, m1d_complex** out) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    *out = new m1d_complex{skeleton(c->value, k)};
  });
}

m1d_status m1d_cone_skeleton1(const m1d_complex* c, m1d_complex** out) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    *out = new m1d_complex{cone_skeleton1(c->value)};
  });
}

m1d_status m1d_is_matroid(const m1d_complex* c, int mode, int* out) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    const MatroidCheck check = mode == M1D_CHECK_FAST
                                   ? MatroidCheck::fast
                                   : MatroidCheck::definitional;
    *out = is_matroid(c->value, check) ? 1 : 0;
  });
}

m1d_status m1d_is_center(const m1d_complex* c, int v, int* out) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    *out = is_center(c->value, v) ? 1 : 0;
  });
}

m1d_status m1d_partial_star(const m1d_complex* c, int v, int k,
                            m1d_complex** out) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    *out = new m1d_complex{partial_star(c->value, v, k)};
  });
}

m1d_status m1d_construct(const int* parts, int count, m1d_complex** out) {
  return guarded([&] {
    if (!out) fail(Errc::bad_input, "null argument");
    *out = new m1d_complex{construct_delta(partition_from(parts, count))};
  });
}

m1d_status m1d_extract_partition(const m1d_complex* c, int* parts, int cap,
                                 int* len) {
  return guarded([&] {
    if (!c || !parts) fail(Errc::bad_input, "null argument");
    const Partition lambda = extract_partition(c->value);
    if (len) *len = lambda.length();
    if (lambda.length() > cap) fail(Errc::bad_input, "buffer too small");
    for (int i = 0; i < lambda.length(); ++i)
      parts[i] = lambda.parts()[static_cast<size_t>(i)];
  });
}

m1d_status m1d_max_clique_size(const m1d_complex* c, int* out) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    *out = max_clique_size(c->value);
  });
}

m1d_status m1d_is_shifted_class(const m1d_complex* c, int* out) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    *out = is_shifted_class(c->value) ? 1 : 0;
  });
}

m1d_status m1d_iso_dim1(const m1d_complex* a, const m1d_complex* b, int* out) {
  return guarded([&] {
    if (!a || !b || !out) fail(Errc::bad_input, "null argument");
    *out = iso_dim1(a->value, b->value) ? 1 : 0;
  });
}

m1d_status m1d_classify(const m1d_complex* c, char** json_out) {
  return guarded([&] {
    if (!c || !json_out) fail(Errc::bad_input, "null argument");
    nlohmann::json j{{"n", c->value.vertex_count()},
                     {"dim", c->value.dim()},
                     {"h", c->value.h_vector().entries()},
                     {"pure", c->value.is_pure()}};
    if (c->value.dim() <= 1) {
      try {
        const Partition lambda = extract_partition(c->value);
        j["matroid"] = true;
        j["partition"] = lambda.to_string();
        j["max_clique"] = lambda.length();
        j["shifted_class"] = is_shifted_class(c->value);
        j["degree_sequence"] = degree_sequence(c->value).counts();
      } catch (const Error& e) {
        if (e.code() != Errc::not_matroid) throw;
        j["matroid"] = false;
      }
    } else if (c->value.vertex_count() <= 20) {
      j["matroid"] = is_matroid(c->value, MatroidCheck::definitional);
    }
    *json_out = copy_string(j.dump());
  });
}

m1d_status m1d_h_of_partition(const int* parts, int count, long long* out,
                              int cap, int* len) {
  return guarded([&] {
    if (!out) fail(Errc::bad_input, "null argument");
    write_vector(h_of_partition(partition_from(parts, count)).entries(), out,
                 cap, len);
  });
}

m1d_status m1d_member(long long h1, long long h2, int mode, int* member,
                      char** witnesses_json) {
  return guarded([&] {
    if (!member) fail(Errc::bad_input, "null argument");
    const MembershipMode mm = mode == M1D_MEMBER_RECURSIVE
                                  ? MembershipMode::recursive
                                  : MembershipMode::closed;
    const Membership result = is_matroid_hvector(HVector({1, h1, h2}), mm);
    *member = result.member ? 1 : 0;
    if (witnesses_json) {
      nlohmann::json names = nlohmann::json::array();
      for (const Partition& p : result.witnesses) names.push_back(p.to_string());
      *witnesses_json = copy_string(names.dump());
    }
  });
}

m1d_status m1d_count(int n, char** json_out) {
  return guarded([&] {
    if (!json_out) fail(Errc::bad_input, "null argument");
    nlohmann::json j{{"n", n},
                     {"classes", count_classes(n).get_str()},
                     {"distinct_hvectors", count_distinct_hvectors(n)},
                     {"labeled", total_labeled(n).get_str()}};
    *json_out = copy_string(j.dump());
  });
}

m1d_status m1d_table1(int max_n, int format, char** out) {
  return guarded([&] {
    if (!out) fail(Errc::bad_input, "null argument");
    const TableFormat f = format == M1D_FORMAT_CSV    ? TableFormat::csv
                          : format == M1D_FORMAT_JSON ? TableFormat::json
                                                      : TableFormat::text;
    *out = copy_string(render_table1(table1_closed(max_n), f));
  });
}

m1d_status m1d_table2(int max_n, int format, char** out) {
  return guarded([&] {
    if (!out) fail(Errc::bad_input, "null argument");
    const TableFormat f = format == M1D_FORMAT_CSV    ? TableFormat::csv
                          : format == M1D_FORMAT_JSON ? TableFormat::json
                                                      : TableFormat::text;
    *out = copy_string(render_table2(table2(max_n), f));
  });
}

m1d_status m1d_hvector_sanity(const long long* h, int len, char** json_out) {
  return guarded([&] {
    if (!h || len < 1 || !json_out) fail(Errc::bad_input, "null argument");
    const HVector hv(std::vector<long long>(h, h + len));
    *json_out = copy_string(sanity_to_json(hvector_sanity(hv)).dump());
  });
}

m1d_status m1d_stanley_reisner(const m1d_complex* c, m1d_ideal** out) {
  return guarded([&] {
    if (!c || !out) fail(Errc::bad_input, "null argument");
    *out = new m1d_ideal{stanley_reisner(c->value)};
  });
}

m1d_status m1d_witness_ideal(const int* parts, int count, m1d_ideal** out) {
  return guarded([&] {
    if (!out) fail(Errc::bad_input, "null argument");
    *out = new m1d_ideal{witness_ideal(partition_from(parts, count))};
  });
}

m1d_status m1d_ideal_from_json(const char* json_text, m1d_ideal** out) {
  return guarded([&] {
    if (!json_text || !out) fail(Errc::bad_input, "null argument");
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) fail(Errc::bad_input, "invalid JSON");
    *out = new m1d_ideal{ideal_from_json(j)};
  });
}

m1d_status m1d_ideal_to_json(const m1d_ideal* ideal, char** out) {
  return guarded([&] {
    if (!ideal || !out) fail(Errc::bad_input, "null argument");
    *out = copy_string(ideal_to_json(ideal->value).dump());
  });
}

m1d_status m1d_ideal_to_text(const m1d_ideal* ideal, char** out) {
  return guarded([&] {
    if (!ideal || !out) fail(Errc::bad_input, "null argument");
    *out = copy_string(ideal_to_text(ideal->value));
  });
}

void m1d_ideal_free(m1d_ideal* ideal) { delete ideal; }

m1d_status m1d_complex_from_ideal(const m1d_ideal* ideal, int max_dim,
                                  m1d_complex** out) {
  return guarded([&] {
    if (!ideal || !out) fail(Errc::bad_input, "null argument");
    *out = new m1d_complex{complex_from_ideal(ideal->value, max_dim)};
  });
}

m1d_status m1d_hilbert_function(const m1d_ideal* ideal, long long* out, int cap,
                                int* len) {
  return guarded([&] {
    if (!ideal || !out) fail(Errc::bad_input, "null argument");
    write_vector(hilbert_function(ideal->value), out, cap, len);
  });
}

m1d_status m1d_socle_report(const m1d_ideal* ideal, char** json_out) {
  return guarded([&] {
    if (!ideal || !json_out) fail(Errc::bad_input, "null argument");
    *json_out = copy_string(socle_to_json(socle_and_purity(ideal->value)).dump());
  });
}

m1d_status m1d_enumerate(int n, int include_labeled, char** json_out) {
  return guarded([&] {
    if (!json_out) fail(Errc::bad_input, "null argument");
    *json_out = copy_string(
        census_to_json(enumerate_matroids(n), include_labeled != 0).dump());
  });
}

m1d_status m1d_oracle(int n, char** report_text, int* all_pass) {
  return guarded([&] {
    const CrosscheckReport report = crosscheck(n);
    if (report_text) *report_text = copy_string(report.to_string());
    if (all_pass) *all_pass = report.all_pass() ? 1 : 0;
  });
}

}  // extern "C"
