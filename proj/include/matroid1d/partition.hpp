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

#ifndef MATROID1D_PARTITION_HPP_
#define MATROID1D_PARTITION_HPP_

#include <string>
#include <vector>

#include "matroid1d/errors.hpp"

namespace matroid1d {

constexpr int kMaxPartitionN = 60;

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int sum() const;                // |λ|
  int length() const { return static_cast<int>(parts_.size()); }
  long long weighted2() const;    // Σ C(λ_i, 2)

  std::string to_string() const;  // "3+1+1"
  std::string compact() const;    // "3 1x2"
  static Partition parse(const std::string& text);  // "3+1+1" or "[3,1,1]"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Pairwise-disjoint non-empty blocks covering {1..n}.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  Partition shape() const;  // block sizes as a partition of n

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;  // each sorted, ordered by minimum
};

/// Restartable reverse-lexicographic stream over the partitions of n.
class PartitionStream {
 public:
  explicit PartitionStream(int n);
  /// Fills `out` with the next partition; false once exhausted.
  bool next(std::vector<int>& out);
  void reset();

 private:
  int n_;
  std::vector<int> current_;
  bool done_ = false;
  bool started_ = false;
};

std::vector<Partition> partitions_of(int n);

}  // namespace matroid1d

#endif  // MATROID1D_PARTITION_HPP_
