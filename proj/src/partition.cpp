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

#include "matroid1d/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace matroid1d {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail(Errc::bad_input, "partition needs at least one part");
  for (int p : parts_)
    if (p < 1) fail(Errc::bad_input, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

long long Partition::weighted2() const {
  long long acc = 0;
  for (int p : parts_) acc += static_cast<long long>(p) * (p - 1) / 2;
  return acc;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << '+';
    os << parts_[i];
  }
  return os.str();
}

std::string Partition::compact() const {
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < parts_.size()) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!first) os << ' ';
    first = false;
    os << parts_[i];
    if (j - i > 1) os << 'x' << (j - i);
    i = j;
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      parts.push_back(std::stoi(cur));
      cur.clear();
    }
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
    } else if (ch == '+' || ch == ',' || ch == '[' || ch == ']' ||
               std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      fail(Errc::bad_input,
           std::string("unexpected character '") + ch + "' in partition");
    }
  }
  flush();
  if (parts.empty()) fail(Errc::bad_input, "empty partition");
  return Partition(std::move(parts));
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) fail(Errc::bad_input, "set partition needs n >= 1");
  std::vector<char> seen(static_cast<size_t>(n + 1), 0);
  for (auto& block : blocks_) {
    if (block.empty()) fail(Errc::bad_input, "empty block in set partition");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 1 || v > n)
        fail(Errc::bad_input, "set partition element outside {1..n}");
      if (seen[static_cast<size_t>(v)])
        fail(Errc::bad_input, "set partition blocks are not disjoint");
      seen[static_cast<size_t>(v)] = 1;
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[static_cast<size_t>(v)])
      fail(Errc::bad_input, "set partition does not cover {1..n}");
  std::sort(blocks_.begin(), blocks_.end());
}

Partition SetPartition::shape() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& block : blocks_)
    sizes.push_back(static_cast<int>(block.size()));
  return Partition(std::move(sizes));
}

PartitionStream::PartitionStream(int n) : n_(n) {
  if (n < 1 || n > kMaxPartitionN)
    fail(Errc::too_large,
         "partition stream supports 1 <= n <= " + std::to_string(kMaxPartitionN));
}

void PartitionStream::reset() {
  current_.clear();
  done_ = false;
  started_ = false;
}

bool PartitionStream::next(std::vector<int>& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    current_ = {n_};
    out = current_;
    return true;
  }
  // find rightmost part > 1; everything after it is a run of 1s
  int i = static_cast<int>(current_.size()) - 1;
  while (i >= 0 && current_[static_cast<size_t>(i)] == 1) --i;
  if (i < 0) {
    done_ = true;
    return false;
  }
  const int trailing_ones = static_cast<int>(current_.size()) - 1 - i;
  int remaining = current_[static_cast<size_t>(i)] + trailing_ones;
  const int cap = current_[static_cast<size_t>(i)] - 1;
  current_.resize(static_cast<size_t>(i));
  while (remaining > 0) {
    const int part = std::min(cap, remaining);
    current_.push_back(part);
    remaining -= part;
  }
  out = current_;
  return true;
}

std::vector<Partition> partitions_of(int n) {
  PartitionStream stream(n);
  std::vector<Partition> out;
  std::vector<int> parts;
  while (stream.next(parts)) out.emplace_back(parts);
  return out;
}

}  // namespace matroid1d
