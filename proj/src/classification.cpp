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

#include "matroid1d/classification.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace matroid1d {

namespace {

long long choose2(long long a) { return a * (a - 1) / 2; }

void check_membership_input(const HVector& h) {
  if (h.size() < 2 || h.size() > 3)
    fail(Errc::malformed_hvector,
         "membership needs (1, h1) or (1, h1, h2), got " + h.to_string());
  for (long long e : h.entries())
    if (e < 0)
      fail(Errc::malformed_hvector, "negative entry in " + h.to_string());
  if (h.at(0) != 1)
    fail(Errc::malformed_hvector, "h_0 must be 1 in " + h.to_string());
}

bool member_recursive(long long m, long long h2,
                      std::map<std::pair<long long, long long>, bool>& memo) {
  if (m < 0 || h2 < 0) return false;
  if (m == 0) return h2 == 0;
  const auto key = std::make_pair(m, h2);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  memo[key] = false;  // cut off cycles (none arise: m strictly decreases)
  bool ok = false;
  for (long long x = m / 2; x <= m && !ok; ++x)
    if (h2 == x * (m - x)) ok = true;
  for (long long x = std::max(m / 2, 1LL); x <= m && !ok; ++x) {
    const long long rest = h2 - x * (m - x + 1);
    if (rest >= 0 && member_recursive(x - 1, rest, memo)) ok = true;
  }
  memo[key] = ok;
  return ok;
}

}  // namespace

HVector h_of_partition(const Partition& lambda) {
  const int n = lambda.sum();
  if (lambda.length() == 1) return HVector({1, n - 1});
  return HVector({1, n - 2, choose2(n - 1) - lambda.weighted2()});
}

Membership is_matroid_hvector(const HVector& h, MembershipMode mode) {
  check_membership_input(h);
  Membership result;
  if (h.size() == 2) {
    // the 0-dimensional family (1, n-1)
    result.member = true;
    result.witnesses.emplace_back(std::vector<int>{static_cast<int>(h.at(1)) + 1});
    return result;
  }
  const long long m = h.at(1);
  const long long h2 = h.at(2);
  if (mode == MembershipMode::recursive) {
    std::map<std::pair<long long, long long>, bool> memo;
    result.member = member_recursive(m, h2, memo);
    return result;
  }
  const long long n = m + 2;
  if (n > kMaxPartitionN)
    fail(Errc::too_large, "membership scan supports h_1 <= " +
                              std::to_string(kMaxPartitionN - 2));
  PartitionStream stream(static_cast<int>(n));
  std::vector<int> parts;
  while (stream.next(parts)) {
    if (parts.size() < 2) continue;
    Partition lambda(parts);
    if (h_of_partition(lambda).at(2) == h2)
      result.witnesses.push_back(std::move(lambda));
  }
  std::sort(result.witnesses.begin(), result.witnesses.end());
  result.member = !result.witnesses.empty();
  return result;
}

mpz_class partition_count(int n) {
  if (n < 0) fail(Errc::bad_input, "p(n) needs n >= 0");
  // p[k] accumulates partitions of k using parts <= current bound
  std::vector<mpz_class> p(static_cast<size_t>(n + 1), 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k)
      p[static_cast<size_t>(k)] += p[static_cast<size_t>(k - part)];
  return p[static_cast<size_t>(n)];
}

mpz_class count_classes(int n) { return partition_count(n) - 1; }

mpz_class count_labeled(const Partition& lambda) {
  const int n = lambda.sum();
  mpz_class numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class denominator = 1;
  size_t i = 0;
  const auto& parts = lambda.parts();
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(j - i));
    denominator *= fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(parts[i]));
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), fac.get_mpz_t(),
               static_cast<unsigned long>(j - i));
    denominator *= power;
    i = j;
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return out;
}

mpz_class total_labeled(int n) {
  if (n < 1) fail(Errc::bad_input, "Bell number needs n >= 1");
  std::vector<mpz_class> prev{1};  // Bell triangle row for n = 1
  for (int i = 2; i <= n; ++i) {
    std::vector<mpz_class> row;
    row.reserve(static_cast<size_t>(i));
    row.push_back(prev.back());
    for (size_t j = 0; j + 1 < static_cast<size_t>(i); ++j)
      row.push_back(row.back() + prev[j]);
    prev = std::move(row);
  }
  return prev.back();
}

std::vector<HVectorGroup> distinct_hvectors(int n) {
  std::map<long long, std::vector<Partition>, std::greater<long long>> groups;
  PartitionStream stream(n);
  std::vector<int> parts;
  while (stream.next(parts)) {
    if (parts.size() < 2) continue;
    Partition lambda(parts);
    groups[h_of_partition(lambda).at(2)].push_back(std::move(lambda));
  }
  std::vector<HVectorGroup> out;
  for (auto& [h2, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back({HVector({1, n - 2, h2}), std::move(members)});
  }
  return out;
}

std::vector<HVectorGroup> duplicate_hvectors(int n) {
  std::vector<HVectorGroup> out;
  for (auto& g : distinct_hvectors(n))
    if (g.partitions.size() > 1) out.push_back(std::move(g));
  return out;
}

int count_distinct_hvectors(int n) {
  return static_cast<int>(distinct_hvectors(n).size());
}

ShadingTable::ShadingTable(int max_n) : max_n_(max_n) {
  if (max_n < 2 || max_n > kMaxPartitionN)
    fail(Errc::bad_input, "table needs 2 <= max_n <= 60");
  for (int n = 2; n <= max_n; ++n)
    rows_.emplace_back(static_cast<size_t>(choose2(n - 1) + 1), 0);
}

long long ShadingTable::row_width(int n) const {
  return static_cast<long long>(rows_[static_cast<size_t>(n - 2)].size());
}

bool ShadingTable::shaded(int n, long long h2) const {
  const long long k = choose2(n - 1) - h2;
  if (n < 2 || n > max_n_ || k < 0 || k >= row_width(n)) return false;
  return rows_[static_cast<size_t>(n - 2)][static_cast<size_t>(k)] != 0;
}

void ShadingTable::shade(int n, long long h2) {
  const long long k = choose2(n - 1) - h2;
  if (n < 2 || n > max_n_ || k < 0 || k >= row_width(n))
    fail(Errc::bad_input, "shading outside the table");
  rows_[static_cast<size_t>(n - 2)][static_cast<size_t>(k)] = 1;
}

std::vector<long long> ShadingTable::shaded_h2(int n) const {
  std::vector<long long> out;
  for (long long h2 = choose2(n - 1); h2 >= 0; --h2)
    if (shaded(n, h2)) out.push_back(h2);
  return out;
}

ShadingTable table1_closed(int max_n) {
  ShadingTable t(max_n);
  for (int n = 2; n <= max_n; ++n) {
    PartitionStream stream(n);
    std::vector<int> parts;
    while (stream.next(parts)) {
      if (parts.size() < 2) continue;
      t.shade(n, h_of_partition(Partition(parts)).at(2));
    }
  }
  return t;
}

void MoveTable::shade_cones() {
  for (int n = 2; n <= table_.max_n(); ++n) table_.shade(n, 0);
}

void MoveTable::close_down() {
  // a shaded (n, h_2) shades (n+1, h_2 + n - 1): same column one row down
  bool changed = true;
  while (changed) {
    changed = false;
    for (int n = 2; n < table_.max_n(); ++n) {
      for (long long h2 = 0; h2 <= choose2(n - 1); ++h2) {
        if (!table_.shaded(n, h2)) continue;
        const long long below = h2 + n - 1;
        if (!table_.shaded(n + 1, below)) {
          table_.shade(n + 1, below);
          changed = true;
        }
      }
    }
  }
}

bool MoveTable::arc_eligible(int n, long long h2) const {
  if (!table_.shaded(n, h2)) return false;
  if (h2 == 0) return true;
  // entry directly above: same column k in row n-1
  const long long k = choose2(n - 1) - h2;
  if (n - 1 < 2 || k > choose2(n - 2)) return false;
  return table_.shaded(n - 1, choose2(n - 2) - k);
}

void MoveTable::diagonal_arcs_from(int n, long long h2) {
  if (!arc_eligible(n, h2)) return;
  const long long k = choose2(n - 1) - h2;
  for (int i = 1; n + i <= table_.max_n(); ++i) {
    const long long kk = k + choose2(i + 1);
    if (kk <= choose2(n + i - 1))
      table_.shade(n + i, choose2(n + i - 1) - kk);
  }
}

void MoveTable::run_to_fixpoint() {
  bool changed = true;
  while (changed) {
    ShadingTable before = table_;
    close_down();
    for (int n = 2; n <= table_.max_n(); ++n)
      for (long long h2 = 0; h2 <= choose2(n - 1); ++h2)
        diagonal_arcs_from(n, h2);
    changed = !(table_ == before);
  }
}

ShadingTable table1_moves(int max_n) {
  MoveTable moves(max_n);
  moves.shade_cones();
  moves.run_to_fixpoint();
  return moves.table();
}

PartitionTable table2(int max_n) {
  if (max_n < 2 || max_n > kMaxPartitionN)
    fail(Errc::bad_input, "table needs 2 <= max_n <= 60");
  PartitionTable t;
  t.max_n = max_n;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::vector<Partition>> row(
        static_cast<size_t>(choose2(n - 1) + 1));
    PartitionStream stream(n);
    std::vector<int> parts;
    while (stream.next(parts)) {
      if (parts.size() < 2) continue;
      Partition lambda(parts);
      const long long k = choose2(n - 1) - h_of_partition(lambda).at(2);
      row[static_cast<size_t>(k)].push_back(std::move(lambda));
    }
    for (auto& cell : row) std::sort(cell.begin(), cell.end());
    t.cells.push_back(std::move(row));
  }
  return t;
}

std::string render_table1(const ShadingTable& t, TableFormat format) {
  std::ostringstream os;
  if (format == TableFormat::text) {
    os << "n | h2 (matroid h-vectors marked *)\n";
    for (int n = 2; n <= t.max_n(); ++n) {
      os << n << " |";
      for (long long h2 = choose2(n - 1); h2 >= 0; --h2)
        os << ' ' << h2 << (t.shaded(n, h2) ? "*" : "");
      os << '\n';
    }
    return os.str();
  }
  if (format == TableFormat::csv) {
    os << "n,h2,matroid\n";
    for (int n = 2; n <= t.max_n(); ++n)
      for (long long h2 = choose2(n - 1); h2 >= 0; --h2)
        os << n << ',' << h2 << ',' << (t.shaded(n, h2) ? 1 : 0) << '\n';
    return os.str();
  }
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 2; n <= t.max_n(); ++n) {
    nlohmann::json cells = nlohmann::json::array();
    for (long long h2 = choose2(n - 1); h2 >= 0; --h2)
      cells.push_back({{"h2", h2}, {"matroid", t.shaded(n, h2)}});
    rows.push_back({{"n", n}, {"cells", cells}});
  }
  return nlohmann::json{{"rows", rows}}.dump();
}

std::string render_table2(const PartitionTable& t, TableFormat format) {
  std::ostringstream os;
  auto cell_at = [&](int n, long long k) -> const std::vector<Partition>& {
    return t.cells[static_cast<size_t>(n - 2)][static_cast<size_t>(k)];
  };
  if (format == TableFormat::text) {
    os << "n | partitions by h2 (descending)\n";
    for (int n = 2; n <= t.max_n; ++n) {
      os << n << " |";
      for (long long k = 0; k <= choose2(n - 1); ++k) {
        const auto& cell = cell_at(n, k);
        os << ' ';
        if (cell.empty()) {
          os << "--";
          continue;
        }
        for (size_t i = 0; i < cell.size(); ++i) {
          if (i) os << '/';
          os << cell[i].compact();
        }
      }
      os << '\n';
    }
    return os.str();
  }
  if (format == TableFormat::csv) {
    os << "n,h2,partitions\n";
    for (int n = 2; n <= t.max_n; ++n)
      for (long long k = 0; k <= choose2(n - 1); ++k) {
        os << n << ',' << (choose2(n - 1) - k) << ',';
        const auto& cell = cell_at(n, k);
        for (size_t i = 0; i < cell.size(); ++i) {
          if (i) os << '/';
          os << cell[i].to_string();
        }
        os << '\n';
      }
    return os.str();
  }
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 2; n <= t.max_n; ++n) {
    nlohmann::json cells = nlohmann::json::array();
    for (long long k = 0; k <= choose2(n - 1); ++k) {
      nlohmann::json names = nlohmann::json::array();
      for (const Partition& p : cell_at(n, k)) names.push_back(p.to_string());
      cells.push_back({{"h2", choose2(n - 1) - k}, {"partitions", names}});
    }
    rows.push_back({{"n", n}, {"cells", cells}});
  }
  return nlohmann::json{{"rows", rows}}.dump();
}

SanityReport hvector_sanity(const HVector& h) {
  SanityReport r;
  r.trimmed = h.trimmed();
  const auto& t = r.trimmed;
  auto partial_sums_ok = [&](long long alpha) {
    for (size_t j = 0; j < t.size(); ++j) {
      long long acc = 0;
      long long power = 1;  // (-alpha)^i
      for (size_t i = 0; i <= j; ++i) {
        acc += power * t[i];
        power *= -alpha;
      }
      if ((j % 2 == 1 ? -acc : acc) < 0) return false;
    }
    return true;
  };
  r.partial_sums_alpha1 = partial_sums_ok(1);
  r.partial_sums_alpha2 = partial_sums_ok(2);
  r.partial_sums_alpha3 = partial_sums_ok(3);
  r.gap_below = true;
  r.gap_middle = true;
  if (t.size() >= 3) {
    const long long m = t[1];
    const long long h2 = t[2];
    if (0 < h2 && h2 < m - 1) r.gap_below = false;
    if (m >= 6 && m < h2 && h2 < 2 * (m - 2)) r.gap_middle = false;
  }
  r.positive = true;
  for (long long e : t)
    if (e <= 0) r.positive = false;
  return r;
}

nlohmann::json sanity_to_json(const SanityReport& r) {
  return nlohmann::json{{"trimmed", r.trimmed},
                        {"partial_sums_alpha1", r.partial_sums_alpha1},
                        {"partial_sums_alpha2", r.partial_sums_alpha2},
                        {"partial_sums_alpha3", r.partial_sums_alpha3},
                        {"gap_below", r.gap_below},
                        {"gap_middle", r.gap_middle},
                        {"positive", r.positive},
                        {"pass", r.pass()}};
}

}  // namespace matroid1d
