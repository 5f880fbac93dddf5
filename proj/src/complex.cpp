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

#include "matroid1d/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace matroid1d {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ok: return "ok";
    case Errc::empty_complex: return "EmptyComplex";
    case Errc::ghost_vertex: return "GhostVertex";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::empty_restriction: return "EmptyRestriction";
    case Errc::not_a_face: return "NotAFace";
    case Errc::bad_skeleton_dim: return "BadSkeletonDim";
    case Errc::too_large: return "TooLarge";
    case Errc::wrong_dim: return "WrongDim";
    case Errc::not_matroid: return "NotMatroid";
    case Errc::bad_count: return "BadCount";
    case Errc::malformed_hvector: return "MalformedHVector";
    case Errc::not_squarefree: return "NotSquarefree";
    case Errc::dim_too_high: return "DimTooHigh";
    case Errc::not_artinian: return "NotArtinian";
    case Errc::overflow: return "Overflow";
    case Errc::assertion_failure: return "AssertionFailure";
    case Errc::bad_input: return "BadInput";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

namespace {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string joined(const std::vector<long long>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

FVector::FVector(std::vector<long long> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_[0] != 1)
    fail(Errc::bad_input, "f-vector must start with f_{-1} = 1");
}

std::string FVector::to_string() const { return joined(entries_); }

HVector::HVector(std::vector<long long> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_[0] != 1)
    fail(Errc::malformed_hvector, "h-vector must start with h_0 = 1");
}

std::vector<long long> HVector::trimmed() const {
  std::vector<long long> t = entries_;
  while (t.size() > 1 && t.back() == 0) t.pop_back();
  return t;
}

std::string HVector::to_string() const { return joined(entries_); }

HVector HVector::parse(const std::string& text) {
  std::vector<long long> entries;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      entries.push_back(std::stoll(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) entries.push_back(std::stoll(cur));
  if (entries.empty()) fail(Errc::malformed_hvector, "empty h-vector");
  return HVector(entries);
}

HVector h_from_f(const FVector& f) {
  const int d = f.dim();
  std::vector<long long> h(static_cast<size_t>(d + 2));
  for (int i = 0; i <= d + 1; ++i) {
    long long acc = 0;
    for (int j = 0; j <= i; ++j) {
      long long term = binomial(d + 1 - j, i - j) * f.at(j - 1);
      acc += ((i - j) % 2 == 0) ? term : -term;
    }
    h[static_cast<size_t>(i)] = acc;
  }
  return HVector(h);
}

FVector f_from_h(const HVector& h) {
  const int d = h.size() - 2;
  std::vector<long long> f(static_cast<size_t>(d + 2));
  for (int i = 0; i <= d + 1; ++i) {
    long long acc = 0;
    for (int j = 0; j <= i; ++j) acc += binomial(d + 1 - j, i - j) * h.at(j);
    f[static_cast<size_t>(i)] = acc;
  }
  return FVector(f);
}

SimplicialComplex SimplicialComplex::build(
    int n, const std::vector<std::vector<int>>& facets) {
  std::vector<Mask> masks;
  masks.reserve(facets.size());
  for (const auto& facet : facets) {
    Mask m = 0;
    for (int v : facet) {
      if (v < 1 || v > n) {
        fail(Errc::vertex_out_of_range,
             "vertex " + std::to_string(v) + " outside {1.." +
                 std::to_string(n) + "}");
      }
      m |= vertex_bit(v);
    }
    masks.push_back(m);
  }
  return from_masks(n, std::move(masks));
}

SimplicialComplex SimplicialComplex::from_masks(int n,
                                                std::vector<Mask> facets) {
  if (n < 1) fail(Errc::empty_complex, "a complex needs at least one vertex");
  if (n > kMaxVertices)
    fail(Errc::too_large, "vertex count exceeds the 31-vertex bitset budget");
  const Mask full = full_mask(n);
  for (Mask f : facets) {
    if (f & ~full)
      fail(Errc::vertex_out_of_range, "facet uses a vertex outside {1..n}");
  }
  // keep only maximal, non-empty facets
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<Mask> maximal;
  for (Mask f : facets) {
    if (f == 0) continue;
    bool dominated = false;
    for (Mask g : facets) {
      if (g != f && (f & g) == f) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(f);
  }
  if (maximal.empty()) fail(Errc::empty_complex, "no non-empty facets");
  Mask covered = 0;
  for (Mask f : maximal) covered |= f;
  if (covered != full) {
    const int ghost = std::countr_one(covered) + 1;
    fail(Errc::ghost_vertex,
         "vertex " + std::to_string(ghost) + " appears in no facet");
  }
  SimplicialComplex c;
  c.n_ = n;
  c.facets_ = std::move(maximal);
  return c;
}

SimplicialComplex SimplicialComplex::complete_graph(int n) {
  if (n == 1) return from_masks(1, {vertex_bit(1)});
  std::vector<Mask> facets;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      facets.push_back(vertex_bit(i) | vertex_bit(j));
  return from_masks(n, std::move(facets));
}

int SimplicialComplex::dim() const {
  int best = -1;
  for (Mask f : facets_) best = std::max(best, std::popcount(f) - 1);
  return best;
}

bool SimplicialComplex::contains(Mask face) const {
  if (face == 0) return true;
  for (Mask f : facets_)
    if ((face & f) == face) return true;
  return false;
}

std::vector<Mask> SimplicialComplex::all_faces() const {
  std::unordered_set<Mask> seen;
  seen.insert(0);
  for (Mask f : facets_) {
    for (Mask s = f;; s = (s - 1) & f) {
      seen.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<Mask> faces(seen.begin(), seen.end());
  std::sort(faces.begin(), faces.end());
  return faces;
}

bool SimplicialComplex::is_pure() const {
  for (Mask f : facets_)
    if (std::popcount(f) != std::popcount(facets_.front())) return false;
  return true;
}

FVector SimplicialComplex::f_vector() const {
  std::vector<long long> f(static_cast<size_t>(dim() + 2), 0);
  for (Mask face : all_faces()) f[static_cast<size_t>(std::popcount(face))]++;
  return FVector(f);
}

std::vector<Mask> SimplicialComplex::adjacency() const {
  std::vector<Mask> adj(static_cast<size_t>(n_), 0);
  for (Mask f : facets_) {
    Mask rest = f;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      adj[static_cast<size_t>(v)] |= f & ~(Mask{1} << v);
    }
  }
  return adj;
}

std::vector<std::vector<int>> SimplicialComplex::facet_lists() const {
  std::vector<std::vector<int>> lists;
  for (Mask f : facets_) {
    std::vector<int> verts;
    Mask rest = f;
    while (rest) {
      verts.push_back(std::countr_zero(rest) + 1);
      rest &= rest - 1;
    }
    lists.push_back(std::move(verts));
  }
  std::sort(lists.begin(), lists.end());
  return lists;
}

namespace {

std::vector<Mask> maximal_of(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    bool dominated = false;
    for (Mask t : sets) {
      if (t != s && (s & t) == s) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

Relabeled relabel(int /*old_n*/, const std::vector<Mask>& facets) {
  Mask covered = 0;
  for (Mask f : facets) covered |= f;
  if (covered == 0) return {SimplicialComplex::empty_complex(), {}};
  std::vector<int> to_original;
  Mask rest = covered;
  while (rest) {
    to_original.push_back(std::countr_zero(rest) + 1);
    rest &= rest - 1;
  }
  std::vector<Mask> renamed;
  renamed.reserve(facets.size());
  for (Mask f : facets) {
    Mask m = 0;
    for (size_t i = 0; i < to_original.size(); ++i)
      if (f & vertex_bit(to_original[i])) m |= Mask{1} << i;
    renamed.push_back(m);
  }
  return {SimplicialComplex::from_masks(static_cast<int>(to_original.size()),
                                        std::move(renamed)),
          std::move(to_original)};
}

}  // namespace

Relabeled restrict_to(const SimplicialComplex& c, Mask w) {
  if (w == 0) fail(Errc::empty_restriction, "restriction to the empty set");
  if (w & ~full_mask(c.vertex_count()))
    fail(Errc::vertex_out_of_range, "restriction set outside {1..n}");
  std::vector<Mask> inter;
  inter.reserve(c.facets().size());
  for (Mask f : c.facets()) inter.push_back(f & w);
  std::vector<Mask> facets = maximal_of(std::move(inter));
  if (facets.empty() || (facets.size() == 1 && facets[0] == 0))
    fail(Errc::empty_restriction, "no non-empty face lies inside W");
  return relabel(c.vertex_count(), facets);
}

Relabeled link_of(const SimplicialComplex& c, Mask face) {
  if (!c.contains(face)) fail(Errc::not_a_face, "link of a non-face");
  std::vector<Mask> rem;
  for (Mask f : c.facets())
    if ((face & f) == face) rem.push_back(f & ~face);
  std::vector<Mask> facets = maximal_of(std::move(rem));
  if (facets.size() == 1 && facets[0] == 0)
    return {SimplicialComplex::empty_complex(), {}};
  return relabel(c.vertex_count(), facets);
}

SimplicialComplex cone(const SimplicialComplex& c) {
  const int n = c.vertex_count();
  if (n >= kMaxVertices)
    fail(Errc::too_large, "cone would exceed the 31-vertex budget");
  const Mask apex = vertex_bit(n + 1);
  if (c.is_empty()) return SimplicialComplex::from_masks(1, {apex});
  std::vector<Mask> facets;
  facets.reserve(c.facets().size());
  for (Mask f : c.facets()) facets.push_back(f | apex);
  return SimplicialComplex::from_masks(n + 1, std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
  if (k < 0 || k > c.dim())
    fail(Errc::bad_skeleton_dim,
         "skeleton dimension " + std::to_string(k) + " outside [0, dim]");
  std::vector<Mask> facets;
  for (Mask f : c.facets()) {
    if (std::popcount(f) <= k + 1) {
      facets.push_back(f);
      continue;
    }
    // all (k+1)-subsets of f
    std::vector<int> verts;
    Mask rest = f;
    while (rest) {
      verts.push_back(std::countr_zero(rest));
      rest &= rest - 1;
    }
    const int sz = static_cast<int>(verts.size());
    for (Mask pick = 0; pick < (Mask{1} << sz); ++pick) {
      if (std::popcount(pick) != k + 1) continue;
      Mask sub = 0;
      for (int i = 0; i < sz; ++i)
        if (pick >> i & 1) sub |= Mask{1} << verts[static_cast<size_t>(i)];
      facets.push_back(sub);
    }
  }
  return SimplicialComplex::from_masks(c.vertex_count(), std::move(facets));
}

SimplicialComplex cone_skeleton1(const SimplicialComplex& c) {
  return skeleton(cone(c), 1);
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
  return nlohmann::json{{"n", c.vertex_count()}, {"facets", c.facet_lists()}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
    fail(Errc::bad_input, "complex JSON needs \"n\" and \"facets\"");
  int n = 0;
  std::vector<std::vector<int>> facets;
  try {
    n = j.at("n").get<int>();
    facets = j.at("facets").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::bad_input, std::string("malformed complex JSON: ") + e.what());
  }
  return SimplicialComplex::build(n, facets);
}

SimplicialComplex complex_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::bad_input, "invalid JSON");
  return complex_from_json(j);
}

}  // namespace matroid1d
