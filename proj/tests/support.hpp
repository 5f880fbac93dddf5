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

// Brute-force oracles for the test suites.  Everything here recomputes
// results from first principles (subset scans, permutation searches) and is
// deliberately independent of the library's own algorithms.

#ifndef MATROID1D_TESTS_SUPPORT_HPP_
#define MATROID1D_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "matroid1d/complex.hpp"
#include "matroid1d/oracle.hpp"

namespace testsupport {

using matroid1d::Mask;
using matroid1d::SimplicialComplex;

inline int brute_max_clique(const SimplicialComplex& c) {
  const int n = c.vertex_count();
  const std::vector<Mask> adj = c.adjacency();
  int best = 0;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    bool clique = true;
    Mask rest = s;
    while (clique && rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if ((adj[static_cast<size_t>(v)] & s) != (s & ~(Mask{1} << v)))
        clique = false;
    }
    if (clique) best = std::max(best, std::popcount(s));
  }
  return best;
}

// exhaustive vertex-permutation isomorphism search
inline bool brute_iso(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  const int n = a.vertex_count();
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  std::vector<Mask> target = b.facets();
  std::sort(target.begin(), target.end());
  do {
    std::vector<Mask> mapped;
    mapped.reserve(a.facets().size());
    for (Mask f : a.facets()) {
      Mask m = 0;
      Mask rest = f;
      while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        m |= Mask{1} << perm[static_cast<size_t>(v)];
      }
      mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// every edge subset of K_n as a complex on exactly n vertices
inline std::vector<SimplicialComplex> all_graph_complexes(int n) {
  std::vector<SimplicialComplex> out;
  const auto pairs = matroid1d::edge_pairs(n);
  for (std::uint32_t emask = 0; emask < (std::uint32_t{1} << pairs.size());
       ++emask)
    out.push_back(matroid1d::complex_from_edge_mask(n, emask));
  return out;
}

// random facet family (antichain after construction) covering all vertices
inline SimplicialComplex random_complex(std::mt19937& rng, int n,
                                        int max_facet_size) {
  std::uniform_int_distribution<int> size_dist(1, max_facet_size);
  std::uniform_int_distribution<int> vert_dist(1, n);
  std::vector<Mask> facets;
  const int count = 1 + static_cast<int>(rng() % (2 * n));
  for (int i = 0; i < count; ++i) {
    Mask f = 0;
    const int size = size_dist(rng);
    for (int j = 0; j < size; ++j) f |= matroid1d::vertex_bit(vert_dist(rng));
    facets.push_back(f);
  }
  Mask covered = 0;
  for (Mask f : facets) covered |= f;
  for (int v = 1; v <= n; ++v)
    if (!(covered & matroid1d::vertex_bit(v)))
      facets.push_back(matroid1d::vertex_bit(v));
  return SimplicialComplex::from_masks(n, std::move(facets));
}

// faces of a relabeled complex, translated back to original labels
inline std::set<Mask> faces_in_original(const matroid1d::Relabeled& r) {
  std::set<Mask> out;
  for (Mask f : r.complex.all_faces()) {
    Mask orig = 0;
    Mask rest = f;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      orig |= matroid1d::vertex_bit(r.to_original[static_cast<size_t>(v)]);
    }
    out.insert(orig);
  }
  return out;
}

// all set partitions of {1..n}, via restricted growth strings
inline std::vector<matroid1d::SetPartition> all_set_partitions(int n) {
  std::vector<matroid1d::SetPartition> out;
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  while (true) {
    int nblocks = 0;
    for (int v : rgs) nblocks = std::max(nblocks, v + 1);
    std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
    for (int i = 0; i < n; ++i)
      blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(i + 1);
    out.emplace_back(n, std::move(blocks));
    int i = n - 1;
    while (i > 0) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j)
        prefix_max = std::max(prefix_max, rgs[static_cast<size_t>(j)]);
      if (rgs[static_cast<size_t>(i)] <= prefix_max) break;
      --i;
    }
    if (i == 0) break;
    rgs[static_cast<size_t>(i)]++;
    for (int j = i + 1; j < n; ++j) rgs[static_cast<size_t>(j)] = 0;
  }
  return out;
}

// number of set partitions of {1..n} per sorted block-size vector
inline std::map<std::vector<int>, long long> set_partition_counts(int n) {
  std::map<std::vector<int>, long long> counts;
  // restricted growth strings
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  while (true) {
    int blocks = 0;
    for (int v : rgs) blocks = std::max(blocks, v + 1);
    std::vector<int> sizes(static_cast<size_t>(blocks), 0);
    for (int v : rgs) sizes[static_cast<size_t>(v)]++;
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    counts[sizes]++;
    // advance
    int i = n - 1;
    while (i > 0) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[static_cast<size_t>(j)]);
      if (rgs[static_cast<size_t>(i)] <= prefix_max) break;
      --i;
    }
    if (i == 0) break;
    rgs[static_cast<size_t>(i)]++;
    for (int j = i + 1; j < n; ++j) rgs[static_cast<size_t>(j)] = 0;
  }
  return counts;
}

}  // namespace testsupport

#endif  // MATROID1D_TESTS_SUPPORT_HPP_
