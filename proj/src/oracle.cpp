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

#include "matroid1d/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "matroid1d/classification.hpp"
#include "matroid1d/matroid.hpp"

namespace matroid1d {

std::vector<std::pair<int, int>> edge_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

SimplicialComplex complex_from_edge_mask(int n, std::uint32_t emask) {
  const auto pairs = edge_pairs(n);
  std::vector<Mask> facets;
  Mask covered = 0;
  for (size_t e = 0; e < pairs.size(); ++e) {
    if (emask >> e & 1) {
      const Mask edge = vertex_bit(pairs[e].first) | vertex_bit(pairs[e].second);
      facets.push_back(edge);
      covered |= edge;
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!(covered & vertex_bit(v))) facets.push_back(vertex_bit(v));
  return SimplicialComplex::from_masks(n, std::move(facets));
}

namespace {

struct GraphScratch {
  int n;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Mask> adj;

  explicit GraphScratch(int n_) : n(n_), pairs(edge_pairs(n_)), adj(n_, 0) {}

  void load(std::uint32_t emask) {
    std::fill(adj.begin(), adj.end(), 0);
    for (size_t e = 0; e < pairs.size(); ++e) {
      if (emask >> e & 1) {
        adj[pairs[e].first - 1] |= vertex_bit(pairs[e].second);
        adj[pairs[e].second - 1] |= vertex_bit(pairs[e].first);
      }
    }
  }

  bool fast_matroid(std::uint32_t emask) const {
    if (emask == 0) return true;  // 0-dimensional
    for (Mask a : adj)
      if (a == 0) return false;
    for (size_t e = 0; e < pairs.size(); ++e) {
      if (!(emask >> e & 1)) continue;
      const Mask edge =
          vertex_bit(pairs[e].first) | vertex_bit(pairs[e].second);
      for (int v = 0; v < n; ++v)
        if ((adj[v] & edge) == 0) return false;
    }
    return true;
  }

  bool definitional_matroid() const {
    for (Mask w = 1; w < (Mask{1} << n); ++w) {
      bool has_edge = false;
      bool has_isolated = false;
      Mask rest = w;
      while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (adj[v] & w)
          has_edge = true;
        else
          has_isolated = true;
        if (has_edge && has_isolated) return false;
      }
    }
    return true;
  }

  // complement components as anti-cliques; empty result means not multipartite
  std::vector<int> multipartite_parts() const {
    const Mask full = full_mask(n);
    std::vector<int> parts;
    Mask seen = 0;
    for (int v = 0; v < n; ++v) {
      if (seen >> v & 1) continue;
      Mask comp = Mask{1} << v;
      Mask frontier = comp;
      while (frontier) {
        Mask next = 0;
        Mask rest = frontier;
        while (rest) {
          const int u = std::countr_zero(rest);
          rest &= rest - 1;
          next |= ~adj[u] & full & ~(Mask{1} << u) & ~comp;
        }
        comp |= next;
        frontier = next;
      }
      seen |= comp;
      Mask rest = comp;
      while (rest) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        if (adj[u] & comp) return {};
      }
      parts.push_back(std::popcount(comp));
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
  }

  int max_clique_bruteforce() const {
    int best = 1;
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
      bool clique = true;
      Mask rest = s;
      while (clique && rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if ((adj[v] & s) != (s & ~(Mask{1} << v))) clique = false;
      }
      if (clique) best = std::max(best, std::popcount(s));
    }
    return best;
  }

  std::vector<int> degree_counts() const {
    std::vector<int> counts(static_cast<size_t>(n), 0);
    for (Mask a : adj) counts[static_cast<size_t>(std::popcount(a))]++;
    return counts;
  }
};

}  // namespace

MatroidCensus enumerate_matroids(int n, bool reverse) {
  if (n < 2 || n > 7)
    fail(Errc::too_large, "exhaustive graph scan supports 2 <= n <= 7");
  MatroidCensus census;
  census.n = n;
  GraphScratch scratch(n);
  const std::uint64_t total = std::uint64_t{1} << scratch.pairs.size();
  for (std::uint64_t step = 0; step < total; ++step) {
    const std::uint32_t emask =
        static_cast<std::uint32_t>(reverse ? total - 1 - step : step);
    scratch.load(emask);
    const bool fast = scratch.fast_matroid(emask);
    const bool definitional = scratch.definitional_matroid();
    const std::vector<int> parts = scratch.multipartite_parts();
    const bool multipartite = !parts.empty();
    if (fast != definitional || definitional != multipartite)
      fail(Errc::assertion_failure,
           "matroid tests disagree on edge mask " + std::to_string(emask));
    if (!definitional) continue;
    census.labeled.push_back(emask);
    census.classes[Partition(parts)].push_back(emask);
  }
  std::sort(census.labeled.begin(), census.labeled.end());
  for (auto& [lambda, members] : census.classes)
    std::sort(members.begin(), members.end());
  for (const auto& [lambda, members] : census.classes) {
    if (lambda.length() < 2) continue;
    census.hvector_groups[h_of_partition(lambda).at(2)].push_back(lambda);
  }
  for (auto& [h2, group] : census.hvector_groups)
    std::sort(group.begin(), group.end());
  return census;
}

std::string CrosscheckReport::to_string() const {
  std::ostringstream os;
  os << "crosscheck n=" << n << '\n';
  for (const Item& item : items)
    os << (item.pass ? "  ok:   " : "  FAIL: ") << item.name
       << (item.detail.empty() ? "" : " (" + item.detail + ")") << '\n';
  os << (all_pass() ? "all assertions hold" : "ASSERTION FAILURE") << '\n';
  return os.str();
}

CrosscheckReport crosscheck(int n) {
  CrosscheckReport report;
  report.n = n;
  MatroidCensus census;
  {
    CrosscheckReport::Item item{"fast = definitional = multipartite on every "
                                "graph", false, ""};
    try {
      census = enumerate_matroids(n);
      item.pass = true;
    } catch (const Error& e) {
      item.detail = e.what();
      report.items.push_back(item);
      return report;
    }
    report.items.push_back(item);
  }

  {
    long dim1 = 0;
    long dim0 = 0;
    for (const auto& [lambda, members] : census.classes)
      (lambda.length() >= 2 ? dim1 : dim0)++;
    const mpz_class expected = count_classes(n);
    const bool pass = mpz_class(dim1) == expected && dim0 == 1;
    report.items.push_back({"class count = p(n) - 1 plus the 0-dim class", pass,
                            std::to_string(dim1) + " one-dimensional classes"});
  }

  {
    bool pass = true;
    std::string detail;
    mpz_class sum = 0;
    for (const auto& [lambda, members] : census.classes) {
      const mpz_class expected = count_labeled(lambda);
      sum += expected;
      if (mpz_class(static_cast<unsigned long>(members.size())) != expected) {
        pass = false;
        detail = "class " + lambda.to_string() + " has " +
                 std::to_string(members.size()) + " members, expected " +
                 expected.get_str();
        break;
      }
    }
    if (pass && sum != total_labeled(n)) {
      pass = false;
      detail = "labeled total mismatch with the Bell number";
    }
    if (pass && mpz_class(static_cast<long>(census.labeled_total())) !=
                    total_labeled(n)) {
      pass = false;
      detail = "census size is not the Bell number";
    }
    report.items.push_back(
        {"labeled counts per class = Faa di Bruno, total = Bell", pass, detail});
  }

  {
    std::set<long long> realized;
    for (const auto& [h2, group] : census.hvector_groups) realized.insert(h2);
    std::set<long long> accepted;
    const long long top = static_cast<long long>(n - 1) * (n - 2) / 2;
    for (long long h2 = 0; h2 <= top; ++h2)
      if (is_matroid_hvector(HVector({1, n - 2, h2})).member)
        accepted.insert(h2);
    const bool pass = realized == accepted;
    report.items.push_back({"realized h-vectors = closed-form membership", pass,
                            std::to_string(realized.size()) + " h-vectors"});
  }

  {
    bool pass = true;
    std::string detail;
    GraphScratch scratch(n);
    std::map<std::vector<int>, std::set<Partition>> by_degseq;
    for (const auto& [lambda, members] : census.classes)
      for (std::uint32_t emask : members) {
        scratch.load(emask);
        by_degseq[scratch.degree_counts()].insert(lambda);
      }
    for (const auto& [degs, lambdas] : by_degseq)
      if (lambdas.size() != 1) {
        pass = false;
        detail = "one degree sequence spans several classes";
      }
    if (by_degseq.size() != census.classes.size()) {
      pass = false;
      detail = "degree-sequence class count differs";
    }
    report.items.push_back(
        {"degree-sequence classes = partition classes", pass, detail});
  }

  {
    bool pass = true;
    std::string detail;
    GraphScratch scratch(n);
    for (const auto& [lambda, members] : census.classes)
      for (std::uint32_t emask : members) {
        scratch.load(emask);
        if (scratch.max_clique_bruteforce() != lambda.length()) {
          pass = false;
          detail = "class " + lambda.to_string();
          break;
        }
      }
    report.items.push_back(
        {"max clique per member = partition length", pass, detail});
  }

  return report;
}

nlohmann::json census_to_json(const MatroidCensus& census,
                              bool include_labeled) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& [lambda, members] : census.classes) {
    nlohmann::json entry{{"partition", lambda.to_string()},
                         {"h", h_of_partition(lambda).to_string()},
                         {"labeled_count", members.size()}};
    if (include_labeled) {
      nlohmann::json masks = nlohmann::json::array();
      for (std::uint32_t m : members) masks.push_back(m);
      entry["edge_masks"] = masks;
    }
    classes.push_back(entry);
  }
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& [h2, group] : census.hvector_groups) {
    nlohmann::json names = nlohmann::json::array();
    for (const Partition& p : group) names.push_back(p.to_string());
    groups.push_back({{"h2", h2}, {"partitions", names}});
  }
  return nlohmann::json{{"n", census.n},
                        {"counts",
                         {{"labeled", census.labeled_total()},
                          {"classes", census.class_total()},
                          {"distinct_hvectors", census.distinct_hvector_total()}}},
                        {"classes", classes},
                        {"hvector_groups", groups}};
}

}  // namespace matroid1d
