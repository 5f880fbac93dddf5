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

#ifndef MATROID1D_MATROID_HPP_
#define MATROID1D_MATROID_HPP_

#include <vector>

#include "matroid1d/complex.hpp"
#include "matroid1d/partition.hpp"

namespace matroid1d {

enum class MatroidCheck {
  definitional,  // every vertex-set restriction is pure (n <= 20)
  fast,          // dim <= 1 shortcut: pure + every link meets every edge
};

bool is_matroid(const SimplicialComplex& c,
                MatroidCheck mode = MatroidCheck::definitional);

/// A center is a vertex whose link contains every other vertex.
bool is_center(const SimplicialComplex& c, int v);

/// k-fold partial star avoiding v: attach k new vertices (labeled n+1..n+k),
/// each joined to every face of link(v).  The original faces stay.
SimplicialComplex partial_star(const SimplicialComplex& c, int v, int k);

/// Canonical complex for a sequence (m_1..m_s): start from the complete graph
/// on {1..s} and take the m_i-fold partial star avoiding vertex i, in order.
/// s = 1 gives the 0-dimensional complex on m_1 + 1 vertices.
SimplicialComplex construct_delta_m(const std::vector<int>& m);

/// Same complex built from the partition λ (m_i = λ_i - 1).
SimplicialComplex construct_delta(const Partition& lambda);

/// Counts of vertices by degree (degree = number of vertices in the link).
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> counts) : counts_(std::move(counts)) {}
  const std::vector<int>& counts() const { return counts_; }
  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> counts_;  // counts_[d] = #vertices of degree d
};

DegreeSequence degree_sequence(const SimplicialComplex& c);

/// Degree-sequence comparison; a valid isomorphism test only for matroids
/// of dimension <= 1 (it is false for general graphs), so both inputs are
/// checked first.
bool iso_dim1(const SimplicialComplex& a, const SimplicialComplex& b);

/// The partition invariant λ_Δ of a dim-<=1 matroid: part sizes are the
/// components of the complement graph, each of which must induce no edges
/// (anti-cliques).  Fails with NotMatroid exactly when the 1-skeleton is not
/// complete multipartite, so this doubles as a recognition routine.
Partition extract_partition(const SimplicialComplex& c);

/// The anti-clique blocks themselves, as a set partition of {1..n}.  Labeled
/// dim-<=1 matroids correspond bijectively to set partitions this way.
SetPartition anticlique_blocks(const SimplicialComplex& c);

/// The labeled matroid whose anti-clique blocks are the given set partition:
/// vertices in different blocks are joined by an edge.
SimplicialComplex complex_from_set_partition(const SetPartition& blocks);

/// ℓ(λ_Δ); equals the size of every maximal clique of the 1-skeleton.
int max_clique_size(const SimplicialComplex& c);

/// True iff λ_Δ has at most one part > 1 (the shifted classes).
bool is_shifted_class(const SimplicialComplex& c);

}  // namespace matroid1d

#endif  // MATROID1D_MATROID_HPP_
