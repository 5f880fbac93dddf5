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

#include "matroid1d/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace matroid1d {

namespace {

// Definitional check specialized to graphs: a restriction is impure exactly
// when it has both an edge and an isolated vertex.
bool graph_all_restrictions_pure(int n, const std::vector<Mask>& adj) {
  for (Mask w = 1; w < (Mask{1} << n); ++w) {
    bool has_edge = false;
    bool has_isolated = false;
    Mask rest = w;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[static_cast<size_t>(v)] & w)
        has_edge = true;
      else
        has_isolated = true;
      if (has_edge && has_isolated) return false;
    }
  }
  return true;
}

bool general_all_restrictions_pure(int n, const std::vector<Mask>& facets) {
  std::vector<Mask> inter;
  inter.reserve(facets.size());
  for (Mask w = 1; w < (Mask{1} << n); ++w) {
    inter.clear();
    for (Mask f : facets) inter.push_back(f & w);
    int facet_size = -1;
    for (size_t i = 0; i < inter.size(); ++i) {
      const Mask x = inter[i];
      bool dominated = false;
      for (size_t j = 0; j < inter.size(); ++j) {
        if (j != i && x != inter[j] && (x & inter[j]) == x) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      const int size = std::popcount(x);
      if (facet_size == -1)
        facet_size = size;
      else if (size != facet_size)
        return false;
    }
  }
  return true;
}

}  // namespace

bool is_matroid(const SimplicialComplex& c, MatroidCheck mode) {
  if (c.is_empty()) return true;
  const int n = c.vertex_count();
  const int d = c.dim();
  if (mode == MatroidCheck::fast) {
    if (d >= 2)
      fail(Errc::wrong_dim, "fast matroid check needs dimension <= 1");
    if (d <= 0) return true;
    const std::vector<Mask> adj = c.adjacency();
    for (Mask a : adj)
      if (a == 0) return false;  // isolated vertex, not pure
    for (Mask f : c.facets())
      for (int v = 0; v < n; ++v)
        if ((adj[static_cast<size_t>(v)] & f) == 0) return false;
    return true;
  }
  if (n > 20)
    fail(Errc::too_large, "definitional matroid check needs n <= 20");
  if (d <= 1) return graph_all_restrictions_pure(n, c.adjacency());
  return general_all_restrictions_pure(n, c.facets());
}

bool is_center(const SimplicialComplex& c, int v) {
  if (v < 1 || v > c.vertex_count())
    fail(Errc::vertex_out_of_range, "center test: vertex out of range");
  const Mask others = full_mask(c.vertex_count()) & ~vertex_bit(v);
  return c.adjacency()[static_cast<size_t>(v - 1)] == others;
}

SimplicialComplex partial_star(const SimplicialComplex& c, int v, int k) {
  const int n = c.vertex_count();
  if (v < 1 || v > n)
    fail(Errc::vertex_out_of_range, "partial star: vertex out of range");
  if (k < 1) fail(Errc::bad_count, "partial star needs k >= 1 new vertices");
  if (n + k > kMaxVertices)
    fail(Errc::too_large, "partial star would exceed the 31-vertex budget");

  // facets of link(v), as subsets of the original vertex set
  std::vector<Mask> link_facets;
  for (Mask f : c.facets())
    if (f & vertex_bit(v)) link_facets.push_back(f & ~vertex_bit(v));
  std::sort(link_facets.begin(), link_facets.end());
  link_facets.erase(std::unique(link_facets.begin(), link_facets.end()),
                    link_facets.end());
  std::vector<Mask> maximal;
  for (Mask s : link_facets) {
    bool dominated = false;
    for (Mask t : link_facets)
      if (t != s && (s & t) == s) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(s);
  }

  std::vector<Mask> facets = c.facets();
  for (int w = n + 1; w <= n + k; ++w)
    for (Mask L : maximal) facets.push_back(L | vertex_bit(w));
  return SimplicialComplex::from_masks(n + k, std::move(facets));
}

SimplicialComplex construct_delta_m(const std::vector<int>& m) {
  if (m.empty()) fail(Errc::bad_input, "m-sequence needs at least one entry");
  for (int e : m)
    if (e < 0) fail(Errc::bad_input, "m-sequence entries must be >= 0");
  const int s = static_cast<int>(m.size());
  const long long total =
      s + std::accumulate(m.begin(), m.end(), 0LL);
  if (total > kMaxVertices)
    fail(Errc::too_large, "complex would exceed the 31-vertex budget");
  SimplicialComplex c = SimplicialComplex::complete_graph(s);
  for (int i = 0; i < s; ++i)
    if (m[static_cast<size_t>(i)] > 0)
      c = partial_star(c, i + 1, m[static_cast<size_t>(i)]);
  return c;
}

SimplicialComplex construct_delta(const Partition& lambda) {
  std::vector<int> m;
  m.reserve(lambda.parts().size());
  for (int p : lambda.parts()) m.push_back(p - 1);
  return construct_delta_m(m);
}

DegreeSequence degree_sequence(const SimplicialComplex& c) {
  if (c.dim() > 1)
    fail(Errc::wrong_dim, "degree sequence is defined for dimension <= 1");
  const int n = c.vertex_count();
  std::vector<int> counts(static_cast<size_t>(n), 0);
  for (Mask a : c.adjacency()) counts[static_cast<size_t>(std::popcount(a))]++;
  return DegreeSequence(std::move(counts));
}

bool iso_dim1(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (const SimplicialComplex* c : {&a, &b}) {
    if (c->dim() > 1)
      fail(Errc::wrong_dim, "degree-sequence isomorphism needs dimension <= 1");
    if (!is_matroid(*c, MatroidCheck::fast))
      fail(Errc::not_matroid,
           "degree-sequence isomorphism is only valid for matroids");
  }
  if (a.vertex_count() != b.vertex_count()) return false;
  return degree_sequence(a) == degree_sequence(b);
}

namespace {

// complement components, each verified to induce no edges
std::vector<Mask> anticlique_component_masks(const SimplicialComplex& c) {
  if (c.is_empty() || c.dim() > 1)
    fail(Errc::wrong_dim,
         "partition extraction needs a dim <= 1 complex on >= 1 vertex");
  const int n = c.vertex_count();
  const Mask full = full_mask(n);
  const std::vector<Mask> adj = c.adjacency();

  std::vector<Mask> components;
  Mask seen = 0;
  for (int v = 0; v < n; ++v) {
    if (seen & (Mask{1} << v)) continue;
    Mask comp = Mask{1} << v;
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      Mask rest = frontier;
      while (rest) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        next |= ~adj[static_cast<size_t>(u)] & full & ~(Mask{1} << u) & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    Mask rest = comp;
    while (rest) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[static_cast<size_t>(u)] & comp)
        fail(Errc::not_matroid,
             "1-skeleton is not complete multipartite: a complement component "
             "induces an edge");
    }
    components.push_back(comp);
  }
  return components;
}

}  // namespace

Partition extract_partition(const SimplicialComplex& c) {
  std::vector<int> parts;
  for (Mask comp : anticlique_component_masks(c))
    parts.push_back(std::popcount(comp));
  return Partition(std::move(parts));
}

SetPartition anticlique_blocks(const SimplicialComplex& c) {
  std::vector<std::vector<int>> blocks;
  for (Mask comp : anticlique_component_masks(c)) {
    std::vector<int> block;
    Mask rest = comp;
    while (rest) {
      block.push_back(std::countr_zero(rest) + 1);
      rest &= rest - 1;
    }
    blocks.push_back(std::move(block));
  }
  return SetPartition(c.vertex_count(), std::move(blocks));
}

SimplicialComplex complex_from_set_partition(const SetPartition& blocks) {
  const int n = blocks.ground_size();
  if (n > kMaxVertices)
    fail(Errc::too_large, "complex would exceed the 31-vertex budget");
  std::vector<int> block_of(static_cast<size_t>(n + 1), 0);
  for (size_t b = 0; b < blocks.blocks().size(); ++b)
    for (int v : blocks.blocks()[b]) block_of[static_cast<size_t>(v)] =
        static_cast<int>(b);
  std::vector<Mask> facets;
  for (int u = 1; u <= n; ++u) facets.push_back(vertex_bit(u));
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (block_of[static_cast<size_t>(u)] != block_of[static_cast<size_t>(v)])
        facets.push_back(vertex_bit(u) | vertex_bit(v));
  return SimplicialComplex::from_masks(n, std::move(facets));
}

int max_clique_size(const SimplicialComplex& c) {
  return extract_partition(c).length();
}

bool is_shifted_class(const SimplicialComplex& c) {
  const Partition lambda = extract_partition(c);
  int big = 0;
  for (int p : lambda.parts())
    if (p > 1) ++big;
  return big <= 1;
}

}  // namespace matroid1d
