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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "matroid1d/classification.hpp"
#include "matroid1d/ideals.hpp"
#include "matroid1d/matroid.hpp"
#include "support.hpp"

using namespace matroid1d;

namespace {

Monomial mono(std::vector<int> exps) { return Monomial(std::move(exps)); }

std::vector<long long> trimmed_h(const Partition& lambda) {
  return h_of_partition(lambda).trimmed();
}

}  // namespace

TEST_CASE("monomial basics") {
  CHECK(mono({2, 0, 1}).to_string() == "x1^2*x3");
  CHECK(mono({0, 0}).to_string() == "1");
  CHECK(mono({2, 0, 1}).degree() == 3);
  CHECK(mono({1, 1, 0}).is_squarefree());
  CHECK_FALSE(mono({2, 0, 0}).is_squarefree());
  CHECK(mono({1, 0, 1}).divides(mono({2, 0, 1})));
  CHECK_FALSE(mono({1, 1, 0}).divides(mono({2, 0, 1})));
  CHECK_THROWS_AS(mono({-1}), Error);
}

TEST_CASE("ideal construction minimalizes") {
  const MonomialIdeal i(2, {mono({1, 0}), mono({1, 1})});
  CHECK(i.generators() == std::vector<Monomial>{mono({1, 0})});

  const MonomialIdeal j(2, {mono({2, 0}), mono({1, 1}), mono({0, 3})});
  CHECK(j.generators().size() == 3);
  CHECK(j.is_artinian());
  CHECK_FALSE(j.is_squarefree());
  CHECK(j.contains(mono({2, 3})));
  CHECK_FALSE(j.contains(mono({0, 2})));

  CHECK_FALSE(MonomialIdeal(2, {mono({1, 1})}).is_artinian());
  CHECK(MonomialIdeal(0, {}).is_artinian());
}

TEST_CASE("Stanley-Reisner generators are the minimal non-faces") {
  // complete graphs: every triple is a minimal non-face
  const MonomialIdeal k4 = stanley_reisner(SimplicialComplex::complete_graph(4));
  CHECK(k4.generators().size() == 4);
  for (const Monomial& g : k4.generators()) {
    CHECK(g.degree() == 3);
    CHECK(g.is_squarefree());
  }

  // the two anti-clique blocks of the twice-starred edge, quadrics only
  const MonomialIdeal fig2 = stanley_reisner(construct_delta_m({2, 2}));
  const std::vector<Monomial> expected{
      mono({1, 0, 1, 0, 0, 0}), mono({1, 0, 0, 1, 0, 0}),
      mono({0, 1, 0, 0, 1, 0}), mono({0, 1, 0, 0, 0, 1}),
      mono({0, 0, 1, 1, 0, 0}), mono({0, 0, 0, 0, 1, 1})};
  std::vector<Monomial> sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  CHECK(fig2.generators() == sorted);

  const MonomialIdeal path = stanley_reisner(
      SimplicialComplex::build(3, {{1, 2}, {2, 3}}));
  CHECK(path.generators() == std::vector<Monomial>{mono({1, 0, 1})});
}

TEST_CASE("complex and ideal round trip") {
  const MonomialIdeal cubics(4, {mono({1, 1, 1, 0}), mono({1, 1, 0, 1}),
                                 mono({1, 0, 1, 1}), mono({0, 1, 1, 1})});
  CHECK(complex_from_ideal(cubics) == SimplicialComplex::complete_graph(4));

  CHECK(complex_from_ideal(MonomialIdeal(2, {mono({1, 1})})) ==
        SimplicialComplex::build(2, {{1}, {2}}));

  std::mt19937 rng(2025);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const SimplicialComplex c = testsupport::random_complex(rng, n, 4);
    CHECK(complex_from_ideal(stanley_reisner(c)) == c);
  }
  for (const SimplicialComplex& c : testsupport::all_graph_complexes(4))
    CHECK(complex_from_ideal(stanley_reisner(c)) == c);

  CHECK_THROWS_AS(complex_from_ideal(MonomialIdeal(2, {mono({2, 0})})), Error);
  CHECK_THROWS_AS(complex_from_ideal(MonomialIdeal(2, {mono({1, 0})})), Error);
  // the zero ideal gives the full simplex, which exceeds max_dim = 1
  CHECK_THROWS_AS(complex_from_ideal(MonomialIdeal(4, {}), 1), Error);
}

TEST_CASE("witness ideal worked examples") {
  const MonomialIdeal j311 = witness_ideal(Partition({3, 1, 1}));
  CHECK(j311.vars() == 3);
  CHECK(j311.generators() ==
        std::vector<Monomial>{mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                              mono({1, 0, 2}), mono({0, 1, 2}),
                              mono({0, 0, 3})});
  CHECK(hilbert_function(j311) == std::vector<long long>{1, 3, 3});
  const SocleReport s311 = socle_and_purity(j311);
  CHECK(s311.is_pure);
  CHECK(s311.degrees == std::vector<int>{2});
  CHECK(s311.socle == std::vector<Monomial>{mono({1, 0, 1}), mono({0, 1, 1}),
                                            mono({0, 0, 2})});

  const MonomialIdeal j222 = witness_ideal(Partition({2, 2, 2}));
  CHECK(j222.vars() == 4);
  CHECK(hilbert_function(j222) == std::vector<long long>{1, 4, 7});
  CHECK(socle_and_purity(j222).is_pure);

  // cone case: the square of the maximal ideal in n-2 variables
  const MonomialIdeal cone6 = witness_ideal(Partition({5, 1}));
  CHECK(cone6.vars() == 4);
  CHECK(hilbert_function(cone6) == std::vector<long long>{1, 4});

  // 0-dimensional case: n-1 variables
  const MonomialIdeal zero6 = witness_ideal(Partition({6}));
  CHECK(zero6.vars() == 5);
  CHECK(hilbert_function(zero6) == std::vector<long long>{1, 5});
  CHECK(socle_and_purity(zero6).degrees == std::vector<int>{1});
}

TEST_CASE("hilbert functions by standard-monomial count") {
  CHECK(hilbert_function(MonomialIdeal(
            2, {mono({2, 0}), mono({1, 1}), mono({0, 3})})) ==
        std::vector<long long>{1, 2, 1});
  CHECK_THROWS_AS(hilbert_function(MonomialIdeal(2, {mono({1, 1})})), Error);
}

TEST_CASE("socle detects impurity") {
  const SocleReport r = socle_and_purity(
      MonomialIdeal(2, {mono({2, 0}), mono({1, 1}), mono({0, 3})}));
  CHECK_FALSE(r.is_pure);
  CHECK(r.degrees == std::vector<int>{1, 2});
  CHECK(r.socle == std::vector<Monomial>{mono({1, 0}), mono({0, 2})});
}

TEST_CASE("every witness ideal realizes its h-vector as a pure O-sequence") {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      const MonomialIdeal j = witness_ideal(lambda);
      CHECK(j.is_artinian());
      CHECK(hilbert_function(j) == trimmed_h(lambda));
      CHECK(socle_and_purity(j).is_pure);
    }
}

TEST_CASE("colon and sum recursion for the witness ideals") {
  // h_d(J_λ) = h_{d-1}(J_γ) + h_d(J_λ̄) with γ the cone over the link and
  // λ̄ the partition with its largest part shrunk by one
  auto h_at = [](const std::vector<long long>& v, int i) {
    return (i >= 0 && i < static_cast<int>(v.size())) ? v[static_cast<size_t>(i)]
                                                      : 0LL;
  };
  for (int n = 3; n <= 9; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      if (lambda.length() < 2) continue;
      std::vector<int> reduced = lambda.parts();
      reduced[0] -= 1;
      if (reduced[0] == 0) reduced.erase(reduced.begin());
      const Partition lbar(reduced);
      const Partition gamma(
          std::vector<int>{n - lambda.parts()[0], 1});
      const auto full = hilbert_function(witness_ideal(lambda));
      const auto colon = hilbert_function(witness_ideal(gamma));
      const auto quotient = hilbert_function(witness_ideal(lbar));
      for (int d = 0; d <= 3; ++d)
        CHECK(h_at(full, d) == h_at(colon, d - 1) + h_at(quotient, d));
    }
}

TEST_CASE("block shape holds for the ideals of all small matroids") {
  // the internal shape assertion would throw on violation
  for (int n = 2; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      if (lambda.length() < 2) continue;
      CHECK_NOTHROW(stanley_reisner(construct_delta(lambda)));
    }
  for (int n = 2; n <= 5; ++n)
    for (const SimplicialComplex& c : testsupport::all_graph_complexes(n))
      CHECK_NOTHROW(stanley_reisner(c));
}

TEST_CASE("text and JSON formats") {
  const MonomialIdeal j311 = witness_ideal(Partition({3, 1, 1}));
  CHECK(ideal_to_text(j311) ==
        "x1^2\nx1*x2\nx2^2\nx1*x3^2\nx2*x3^2\nx3^3\n");

  const nlohmann::json j = ideal_to_json(j311);
  CHECK(j["vars"] == 3);
  CHECK(ideal_from_json(j) == j311);
  CHECK_THROWS_AS(ideal_from_json(nlohmann::json{{"vars", 2}}), Error);
}
