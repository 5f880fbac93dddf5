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

#include "matroid1d/ideals.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "matroid1d/matroid.hpp"

namespace matroid1d {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) fail(Errc::bad_input, "negative exponent in monomial");
}

Monomial Monomial::squarefree_from_mask(Mask m, int vars) {
  std::vector<int> exps(static_cast<size_t>(vars), 0);
  Mask rest = m;
  while (rest) {
    exps[static_cast<size_t>(std::countr_zero(rest))] = 1;
    rest &= rest - 1;
  }
  return Monomial(std::move(exps));
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_squarefree() const {
  for (int e : exps_)
    if (e > 1) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (exps_[i] > 1) os << '^' << exps_[i];
  }
  return first ? "1" : os.str();
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exps_ > b.exps_;  // lexicographic within a degree
}

MonomialIdeal::MonomialIdeal(int vars, std::vector<Monomial> generators)
    : vars_(vars) {
  if (vars < 0) fail(Errc::bad_input, "variable count must be >= 0");
  for (const Monomial& g : generators)
    if (g.vars() != vars)
      fail(Errc::bad_input, "generator has the wrong number of variables");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (const Monomial& g : generators) {
    bool redundant = false;
    for (const Monomial& h : generators)
      if (!(h == g) && h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::is_squarefree() const {
  for (const Monomial& g : gens_)
    if (!g.is_squarefree()) return false;
  return true;
}

bool MonomialIdeal::is_artinian() const {
  for (int v = 0; v < vars_; ++v) {
    bool found = false;
    for (const Monomial& g : gens_) {
      bool pure = g.exponents()[static_cast<size_t>(v)] > 0;
      for (int u = 0; pure && u < vars_; ++u)
        if (u != v && g.exponents()[static_cast<size_t>(u)] > 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

// Upper bounds on standard-monomial exponents: one less than the least pure
// power of each variable.  Only valid for artinian ideals.
std::vector<int> standard_box(const MonomialIdeal& ideal) {
  std::vector<int> box(static_cast<size_t>(ideal.vars()), 0);
  for (int v = 0; v < ideal.vars(); ++v) {
    int least = -1;
    for (const Monomial& g : ideal.generators()) {
      bool pure = g.exponents()[static_cast<size_t>(v)] > 0;
      for (int u = 0; pure && u < ideal.vars(); ++u)
        if (u != v && g.exponents()[static_cast<size_t>(u)] > 0) pure = false;
      if (pure) {
        const int e = g.exponents()[static_cast<size_t>(v)];
        if (least < 0 || e < least) least = e;
      }
    }
    box[static_cast<size_t>(v)] = least - 1;  // exponents 0..least-1
  }
  return box;
}

void for_each_standard_monomial(
    const MonomialIdeal& ideal,
    const std::function<void(const std::vector<int>&)>& visit) {
  if (!ideal.is_artinian())
    fail(Errc::not_artinian, "standard-monomial scan needs an artinian ideal");
  const int v = ideal.vars();
  const std::vector<int> box = standard_box(ideal);
  long long cells = 1;
  for (int b : box) {
    cells *= b + 1;
    if (cells > 50'000'000)
      fail(Errc::too_large, "standard-monomial box too large to enumerate");
  }
  std::vector<int> exps(static_cast<size_t>(v), 0);
  std::function<void(int)> rec = [&](int var) {
    if (var == v) {
      if (!ideal.contains(Monomial(exps))) visit(exps);
      return;
    }
    for (int e = 0; e <= box[static_cast<size_t>(var)]; ++e) {
      exps[static_cast<size_t>(var)] = e;
      rec(var + 1);
    }
    exps[static_cast<size_t>(var)] = 0;
  };
  rec(0);
}

}  // namespace

MonomialIdeal stanley_reisner(const SimplicialComplex& c) {
  const int n = c.vertex_count();
  if (n > 20)
    fail(Errc::too_large, "minimal non-face scan needs n <= 20");
  if (c.is_empty()) fail(Errc::empty_complex, "no vertices, no ideal");
  std::unordered_set<Mask> faces;
  for (Mask f : c.all_faces()) faces.insert(f);
  const int max_size = c.dim() + 2;

  std::vector<Monomial> gens;
  std::vector<int> members;
  std::function<void(int, int, Mask)> combos = [&](int start, int left,
                                                   Mask acc) {
    if (left == 0) {
      if (faces.count(acc)) return;
      Mask rest = acc;
      while (rest) {
        const Mask sub = acc & ~(rest & -rest);
        rest &= rest - 1;
        if (!faces.count(sub)) return;  // a smaller non-face inside
      }
      gens.push_back(Monomial::squarefree_from_mask(acc, n));
      return;
    }
    for (int v = start; v <= n - left; ++v)
      combos(v + 1, left - 1, acc | vertex_bit(v + 1));
  };
  for (int size = 1; size <= max_size; ++size) combos(0, size, 0);
  MonomialIdeal ideal(n, std::move(gens));

  // dim-1 matroids must decompose into complete quadric blocks on the
  // anti-cliques plus the transversal cubics
  if (c.dim() == 1) {
    bool matroid = true;
    std::vector<Mask> blocks;
    try {
      const SetPartition anticliques = anticlique_blocks(c);
      for (const std::vector<int>& block : anticliques.blocks()) {
        Mask m = 0;
        for (int v : block) m |= vertex_bit(v);
        blocks.push_back(m);
      }
    } catch (const Error&) {
      matroid = false;
    }
    if (matroid) {
      for (const Monomial& g : ideal.generators()) {
        Mask support = 0;
        for (int v = 0; v < n; ++v)
          if (g.exponents()[static_cast<size_t>(v)]) support |= Mask{1} << v;
        if (g.degree() == 2) {
          bool inside = false;
          for (Mask b : blocks)
            if ((support & b) == support) inside = true;
          if (!inside)
            fail(Errc::internal,
                 "degree-2 generator not inside an anti-clique block");
        } else {
          for (Mask b : blocks)
            if (std::popcount(support & b) > 1)
              fail(Errc::internal,
                   "degree-3 generator meets a block twice");
        }
      }
    }
  }
  return ideal;
}

SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal, int max_dim) {
  if (!ideal.is_squarefree())
    fail(Errc::not_squarefree, "Stanley-Reisner inversion needs a squarefree "
                               "ideal");
  const int n = ideal.vars();
  if (n < 1) fail(Errc::bad_input, "need at least one variable");
  if (n > 20) fail(Errc::too_large, "face scan needs n <= 20");
  std::vector<Mask> gen_masks;
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() == 1)
      fail(Errc::ghost_vertex,
           "a variable lies in the ideal, so its vertex is in no face");
    Mask m = 0;
    for (int v = 0; v < n; ++v)
      if (g.exponents()[static_cast<size_t>(v)]) m |= Mask{1} << v;
    gen_masks.push_back(m);
  }
  std::vector<char> face(Mask{1} << n, 1);
  for (Mask g : gen_masks) {
    // mark every superset of g as a non-face
    const Mask rest = full_mask(n) & ~g;
    for (Mask s = rest;; s = (s - 1) & rest) {
      face[g | s] = 0;
      if (s == 0) break;
    }
  }
  std::vector<Mask> facets;
  for (Mask f = 0; f < (Mask{1} << n); ++f) {
    if (!face[f]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(f & (Mask{1} << v)) && face[f | (Mask{1} << v)]) maximal = false;
    if (maximal) facets.push_back(f);
  }
  SimplicialComplex out = SimplicialComplex::from_masks(n, std::move(facets));
  if (max_dim >= 0 && out.dim() > max_dim)
    fail(Errc::dim_too_high, "complex has dimension " +
                                 std::to_string(out.dim()) + " > " +
                                 std::to_string(max_dim));
  return out;
}

MonomialIdeal witness_ideal(const Partition& lambda) {
  const int n = lambda.sum();
  const int vars = lambda.length() == 1 ? n - 1 : n - 2;
  std::vector<Monomial> gens;
  auto quadric = [&](int a, int b) {
    std::vector<int> e(static_cast<size_t>(vars), 0);
    e[static_cast<size_t>(a)] += 1;
    e[static_cast<size_t>(b)] += 1;
    gens.emplace_back(std::move(e));
  };
  if (lambda.length() == 1) {
    for (int a = 0; a < vars; ++a)
      for (int b = a; b < vars; ++b) quadric(a, b);
    return MonomialIdeal(vars, std::move(gens));
  }
  int pos = 0;
  for (int part : lambda.parts()) {
    const int block = part - 1;
    for (int a = pos; a < pos + block; ++a)
      for (int b = a; b < pos + block; ++b) quadric(a, b);
    pos += block;
  }
  for (int a = 0; a < vars; ++a)
    for (int b = a; b < vars; ++b)
      for (int c = b; c < vars; ++c) {
        std::vector<int> e(static_cast<size_t>(vars), 0);
        e[static_cast<size_t>(a)] += 1;
        e[static_cast<size_t>(b)] += 1;
        e[static_cast<size_t>(c)] += 1;
        gens.emplace_back(std::move(e));
      }
  return MonomialIdeal(vars, std::move(gens));
}

std::vector<long long> hilbert_function(const MonomialIdeal& ideal) {
  std::vector<long long> hf;
  for_each_standard_monomial(ideal, [&](const std::vector<int>& exps) {
    const size_t d = static_cast<size_t>(
        std::accumulate(exps.begin(), exps.end(), 0));
    if (hf.size() <= d) hf.resize(d + 1, 0);
    hf[d]++;
  });
  while (!hf.empty() && hf.back() == 0) hf.pop_back();
  return hf;
}

SocleReport socle_and_purity(const MonomialIdeal& ideal) {
  SocleReport r;
  const int v = ideal.vars();
  for_each_standard_monomial(ideal, [&](const std::vector<int>& exps) {
    for (int j = 0; j < v; ++j) {
      std::vector<int> up = exps;
      up[static_cast<size_t>(j)]++;
      if (!ideal.contains(Monomial(up))) return;
    }
    r.socle.emplace_back(exps);
  });
  std::sort(r.socle.begin(), r.socle.end());
  for (const Monomial& m : r.socle)
    if (r.degrees.empty() || r.degrees.back() != m.degree())
      r.degrees.push_back(m.degree());
  r.is_pure = r.degrees.size() <= 1;
  r.is_level = r.is_pure;
  return r;
}

std::string ideal_to_text(const MonomialIdeal& ideal) {
  std::ostringstream os;
  for (const Monomial& g : ideal.generators()) os << g.to_string() << '\n';
  return os.str();
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(g.exponents());
  return nlohmann::json{{"vars", ideal.vars()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
    fail(Errc::bad_input, "ideal JSON needs \"vars\" and \"gens\"");
  int vars = 0;
  std::vector<std::vector<int>> exps;
  try {
    vars = j.at("vars").get<int>();
    exps = j.at("gens").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::bad_input, std::string("malformed ideal JSON: ") + e.what());
  }
  std::vector<Monomial> gens;
  gens.reserve(exps.size());
  for (auto& e : exps) gens.emplace_back(std::move(e));
  return MonomialIdeal(vars, std::move(gens));
}

nlohmann::json socle_to_json(const SocleReport& r) {
  nlohmann::json socle = nlohmann::json::array();
  for (const Monomial& m : r.socle) socle.push_back(m.to_string());
  return nlohmann::json{{"socle", socle},
                        {"degrees", r.degrees},
                        {"pure", r.is_pure},
                        {"level", r.is_level}};
}

}  // namespace matroid1d
