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

#ifndef MATROID1D_COMPLEX_HPP_
#define MATROID1D_COMPLEX_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "matroid1d/errors.hpp"

namespace matroid1d {

// Vertex sets are bitmasks: bit v-1 holds vertex v.  Everything here keeps
// complexes small enough (n <= 31) that face operations are word operations.
using Mask = std::uint32_t;

constexpr int kMaxVertices = 31;

inline Mask vertex_bit(int v) { return Mask{1} << (v - 1); }
inline Mask full_mask(int n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

/// f-vector (f_{-1}, f_0, ..., f_d); entry access is by face dimension.
class FVector {
 public:
  FVector() : entries_{1} {}
  explicit FVector(std::vector<long long> entries);

  long long at(int dim) const { return entries_[static_cast<size_t>(dim + 1)]; }
  int dim() const { return static_cast<int>(entries_.size()) - 2; }
  const std::vector<long long>& entries() const { return entries_; }
  std::string to_string() const;

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<long long> entries_;  // entries_[i] = f_{i-1}
};

/// h-vector (h_0, ..., h_{d+1}).
class HVector {
 public:
  HVector() : entries_{1} {}
  explicit HVector(std::vector<long long> entries);

  long long at(int i) const { return entries_[static_cast<size_t>(i)]; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<long long>& entries() const { return entries_; }
  std::vector<long long> trimmed() const;  // drop trailing zeros
  std::string to_string() const;           // "(1,4,7)"
  static HVector parse(const std::string& text);  // "1,4,7"

  friend bool operator==(const HVector&, const HVector&) = default;
  friend bool operator<(const HVector& a, const HVector& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<long long> entries_;
};

HVector h_from_f(const FVector& f);
FVector f_from_h(const HVector& h);

/// Finite simplicial complex on vertex set {1..n}, stored by its facets.
///
/// Invariants: facets form an antichain, every vertex appears in some facet
/// (no ghost vertices), and faces are implicitly all subsets of facets plus
/// the empty face.  The one complex with no vertices is the empty-face-only
/// complex {∅}, represented by n = 0 with no facets.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // {∅}

  static SimplicialComplex build(int n,
                                 const std::vector<std::vector<int>>& facets);
  static SimplicialComplex from_masks(int n, std::vector<Mask> facets);
  static SimplicialComplex empty_complex() { return SimplicialComplex(); }
  static SimplicialComplex complete_graph(int n);

  int vertex_count() const { return n_; }
  const std::vector<Mask>& facets() const { return facets_; }
  int dim() const;
  bool is_empty() const { return n_ == 0; }

  bool contains(Mask face) const;
  std::vector<Mask> all_faces() const;  // includes the empty face
  bool is_pure() const;

  FVector f_vector() const;
  HVector h_vector() const { return h_from_f(f_vector()); }

  /// Adjacency of the 1-skeleton: entry v-1 is the neighbor mask of v.
  std::vector<Mask> adjacency() const;

  std::vector<std::vector<int>> facet_lists() const;  // 1-based, sorted

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> facets_;  // sorted ascending as integers
};

/// Result of an operation that renames vertices to 1..k: `to_original[i]`
/// is the original label of new vertex i+1.
struct Relabeled {
  SimplicialComplex complex;
  std::vector<int> to_original;
};

Relabeled restrict_to(const SimplicialComplex& c, Mask w);
Relabeled link_of(const SimplicialComplex& c, Mask face);
SimplicialComplex cone(const SimplicialComplex& c);
SimplicialComplex skeleton(const SimplicialComplex& c, int k);

/// C1: 1-skeleton of the cone.
SimplicialComplex cone_skeleton1(const SimplicialComplex& c);

nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);
SimplicialComplex complex_from_json_text(const std::string& text);

}  // namespace matroid1d

#endif  // MATROID1D_COMPLEX_HPP_
