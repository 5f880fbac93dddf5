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

#ifndef MATROID1D_CLASSIFICATION_HPP_
#define MATROID1D_CLASSIFICATION_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "matroid1d/complex.hpp"
#include "matroid1d/partition.hpp"

namespace matroid1d {

/// h-vector of the class Δ_λ: (1, n-1) when ℓ(λ) = 1, otherwise
/// (1, n-2, C(n-1,2) - Σ C(λ_i,2)).
HVector h_of_partition(const Partition& lambda);

enum class MembershipMode { closed, recursive };

struct Membership {
  bool member = false;
  std::vector<Partition> witnesses;  // closed mode only; lexicographic order
};

/// Decides whether h is the h-vector of a matroid complex of dimension <= 1.
/// Closed mode scans partitions of n = h_1 + 2 and returns all witnesses;
/// recursive mode evaluates the two-case decomposition over
/// x in [floor(m/2), m] with memoization.  A length-2 vector (1, k) is the
/// 0-dimensional family and is always accepted.
Membership is_matroid_hvector(const HVector& h,
                              MembershipMode mode = MembershipMode::closed);

mpz_class partition_count(int n);                 // p(n)
mpz_class count_classes(int n);                   // p(n) - 1 (dimension-1 classes)
mpz_class count_labeled(const Partition& lambda); // Faà di Bruno coefficient
mpz_class total_labeled(int n);                   // Bell number B(n)
int count_distinct_hvectors(int n);

struct HVectorGroup {
  HVector h;
  std::vector<Partition> partitions;  // every ℓ >= 2 partition with this h
};

/// Groups the ℓ >= 2 partitions of n by h-vector, in descending h_2 order.
std::vector<HVectorGroup> distinct_hvectors(int n);
std::vector<HVectorGroup> duplicate_hvectors(int n);  // groups of size > 1

/// Shading of the h_2 table: rows n = 2..max_n, columns indexed by
/// k = C(n-1,2) - h_2 (so column 0 is the largest h_2).
class ShadingTable {
 public:
  explicit ShadingTable(int max_n);
  int max_n() const { return max_n_; }
  long long row_width(int n) const;  // number of columns = C(n-1,2) + 1
  bool shaded(int n, long long h2) const;
  void shade(int n, long long h2);
  std::vector<long long> shaded_h2(int n) const;  // descending

  friend bool operator==(const ShadingTable&, const ShadingTable&) = default;

 private:
  int max_n_;
  std::vector<std::vector<char>> rows_;  // rows_[n-2][k]
};

ShadingTable table1_closed(int max_n);

/// The independent table generator built from the two moves: straight down
/// (C1) from any shaded entry, and parabolic arcs (k-fold partial stars) from
/// entries whose class contains a centered complex, i.e. entries shaded
/// directly above or sitting at h_2 = 0.
class MoveTable {
 public:
  explicit MoveTable(int max_n) : table_(max_n) {}

  void shade_cones();  // h_2 = 0 in every row
  void close_down();   // transitive closure of the down move
  bool arc_eligible(int n, long long h2) const;
  /// Shades the whole parabolic arc from (n, h2); no-op entries are skipped.
  void diagonal_arcs_from(int n, long long h2);
  void run_to_fixpoint();

  const ShadingTable& table() const { return table_; }

 private:
  ShadingTable table_;
};

ShadingTable table1_moves(int max_n);

struct PartitionTable {
  int max_n = 0;
  // cells[n-2][k] = partitions with h_2 = C(n-1,2) - k, descending h_2
  std::vector<std::vector<std::vector<Partition>>> cells;
};

PartitionTable table2(int max_n);

enum class TableFormat { text, csv, json };

std::string render_table1(const ShadingTable& t, TableFormat format);
std::string render_table2(const PartitionTable& t, TableFormat format);

/// Numeric sanity checks on an accepted h-vector (trailing zeros trimmed):
/// the alternating partial-sum inequalities for alpha = 1,2,3, the two
/// excluded-gap facts, and positivity of the trimmed entries.
struct SanityReport {
  std::vector<long long> trimmed;
  bool partial_sums_alpha1 = false;
  bool partial_sums_alpha2 = false;
  bool partial_sums_alpha3 = false;
  bool gap_below = false;   // no 0 < h_2 < m-1
  bool gap_middle = false;  // for m >= 6, no m < h_2 < 2(m-2)
  bool positive = false;
  bool pass() const {
    return partial_sums_alpha1 && partial_sums_alpha2 && partial_sums_alpha3 &&
           gap_below && gap_middle && positive;
  }
};

SanityReport hvector_sanity(const HVector& h);

nlohmann::json sanity_to_json(const SanityReport& r);

}  // namespace matroid1d

#endif  // MATROID1D_CLASSIFICATION_HPP_
