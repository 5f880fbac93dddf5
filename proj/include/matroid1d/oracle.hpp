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

#ifndef MATROID1D_ORACLE_HPP_
#define MATROID1D_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "matroid1d/complex.hpp"
#include "matroid1d/partition.hpp"

namespace matroid1d {

/// Ground truth at desk scale: every edge subset of K_n, filtered by the
/// definitional matroid test, classified by partition.
struct MatroidCensus {
  int n = 0;
  /// Edge-set bitmasks of the matroid complexes, bit e = e-th pair in
  /// lexicographic order over (i, j), i < j.  The edgeless mask 0 is the
  /// 0-dimensional complex.
  std::vector<std::uint32_t> labeled;
  std::map<Partition, std::vector<std::uint32_t>> classes;
  std::map<long long, std::vector<Partition>> hvector_groups;  // key h_2, dim-1

  long long labeled_total() const {
    return static_cast<long long>(labeled.size());
  }
  long long class_total() const { return static_cast<long long>(classes.size()); }
  long long distinct_hvector_total() const {
    return static_cast<long long>(hvector_groups.size());
  }
};

std::vector<std::pair<int, int>> edge_pairs(int n);  // lexicographic, 1-based
SimplicialComplex complex_from_edge_mask(int n, std::uint32_t emask);

/// Scans all 2^C(n,2) graphs (2 <= n <= 7).  Every graph is run through the
/// fast and the definitional test and through partition extraction; any
/// disagreement throws AssertionFailure.  `reverse` flips iteration order
/// (the census must not depend on it).
MatroidCensus enumerate_matroids(int n, bool reverse = false);

struct CrosscheckReport {
  struct Item {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  int n = 0;
  std::vector<Item> items;
  bool all_pass() const {
    for (const Item& item : items)
      if (!item.pass) return false;
    return true;
  }
  std::string to_string() const;
};

/// Runs the six census assertions for one n: class counts, labeled counts,
/// realized h-vectors vs closed-form membership, test agreement, degree
/// sequence classes and max cliques.
CrosscheckReport crosscheck(int n);

nlohmann::json census_to_json(const MatroidCensus& census, bool include_labeled);

}  // namespace matroid1d

#endif  // MATROID1D_ORACLE_HPP_
