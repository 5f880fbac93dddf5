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

#include <functional>
#include <random>

#include "matroid1d/complex.hpp"
#include "support.hpp"

using namespace matroid1d;

namespace {

SimplicialComplex k3() { return SimplicialComplex::complete_graph(3); }

SimplicialComplex path3() { return SimplicialComplex::build(3, {{1, 2}, {2, 3}}); }

// the non-pure complex whose proper restrictions are all pure
SimplicialComplex mixed4() {
  return SimplicialComplex::build(4, {{1, 2}, {1, 3}, {2, 3, 4}});
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ok;
}

}  // namespace

TEST_CASE("build validates and normalizes") {
  const SimplicialComplex c = k3();
  CHECK(c.vertex_count() == 3);
  CHECK(c.dim() == 1);
  CHECK(c.facets().size() == 3);

  CHECK(mixed4().dim() == 2);
  CHECK_FALSE(mixed4().is_pure());

  // non-maximal facets are dropped
  const SimplicialComplex d =
      SimplicialComplex::build(3, {{1}, {1, 2}, {1, 2, 3}});
  CHECK(d.facets() == std::vector<Mask>{0b111});

  CHECK(code_of([] { SimplicialComplex::build(3, {{1, 2}}); }) ==
        Errc::ghost_vertex);
  CHECK(code_of([] { SimplicialComplex::build(2, {}); }) ==
        Errc::empty_complex);
  CHECK(code_of([] { SimplicialComplex::build(3, {{1, 4}}); }) ==
        Errc::vertex_out_of_range);
  CHECK(code_of([] {
          std::vector<std::vector<int>> facets;
          for (int v = 1; v <= 32; ++v) facets.push_back({v});
          SimplicialComplex::build(32, facets);
        }) == Errc::too_large);
}

TEST_CASE("ghost vertex reports the smallest missing label") {
  try {
    SimplicialComplex::build(4, {{1, 2}});
    FAIL("expected GhostVertex");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ghost_vertex);
    CHECK(std::string(e.what()).find('3') != std::string::npos);
  }
}

TEST_CASE("purity") {
  CHECK(k3().is_pure());
  CHECK_FALSE(mixed4().is_pure());
  CHECK(SimplicialComplex::build(1, {{1}}).is_pure());
  CHECK(SimplicialComplex::empty_complex().is_pure());
}

TEST_CASE("f and h vectors") {
  CHECK(k3().f_vector().entries() == std::vector<long long>{1, 3, 3});
  CHECK(k3().h_vector().entries() == std::vector<long long>{1, 1, 1});

  // 0-dimensional: n isolated vertices
  const SimplicialComplex pts =
      SimplicialComplex::build(4, {{1}, {2}, {3}, {4}});
  CHECK(pts.f_vector().entries() == std::vector<long long>{1, 4});
  CHECK(pts.h_vector().entries() == std::vector<long long>{1, 3});

  CHECK(SimplicialComplex::empty_complex().f_vector().entries() ==
        std::vector<long long>{1});
  CHECK(SimplicialComplex::empty_complex().h_vector().entries() ==
        std::vector<long long>{1});

  CHECK(path3().h_vector().entries() == std::vector<long long>{1, 1, 0});
}

TEST_CASE("f/h round trip on generated complexes up to dim 2, n <= 8") {
  std::mt19937 rng(20250809);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      const SimplicialComplex c = testsupport::random_complex(rng, n, 3);
      const FVector f = c.f_vector();
      CHECK(f_from_h(h_from_f(f)) == f);
      CHECK(c.h_vector().at(0) == 1);
    }
  }
  for (const SimplicialComplex& c : testsupport::all_graph_complexes(4)) {
    const FVector f = c.f_vector();
    CHECK(f_from_h(h_from_f(f)) == f);
  }
}

TEST_CASE("restriction") {
  const Relabeled edge = restrict_to(k3(), 0b011);
  CHECK(edge.complex == SimplicialComplex::build(2, {{1, 2}}));
  CHECK(edge.to_original == std::vector<int>{1, 2});

  // all proper restrictions of the mixed complex are pure
  const SimplicialComplex m = mixed4();
  for (Mask w = 1; w < 0b1111; ++w) CHECK(restrict_to(m, w).complex.is_pure());
  CHECK_FALSE(restrict_to(m, 0b1111).complex.is_pure());

  const Relabeled pts = restrict_to(path3(), 0b101);
  CHECK(pts.complex == SimplicialComplex::build(2, {{1}, {2}}));
  CHECK(pts.complex.dim() == 0);
  CHECK(pts.to_original == std::vector<int>{1, 3});

  CHECK(code_of([] { restrict_to(k3(), 0); }) == Errc::empty_restriction);
  CHECK(code_of([] { restrict_to(k3(), 0b1000); }) ==
        Errc::vertex_out_of_range);
}

TEST_CASE("restriction composes through the label maps") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const SimplicialComplex c = testsupport::random_complex(rng, n, 3);
    const Mask w = 1 + static_cast<Mask>(rng() % (full_mask(n)));
    const Relabeled first = restrict_to(c, w);
    const int k = first.complex.vertex_count();
    const Mask v_new = 1 + static_cast<Mask>(rng() % (full_mask(k)));
    Mask v_orig = 0;
    for (int i = 0; i < k; ++i)
      if (v_new & (Mask{1} << i))
        v_orig |= vertex_bit(first.to_original[static_cast<size_t>(i)]);
    CHECK(restrict_to(first.complex, v_new).complex ==
          restrict_to(c, v_orig).complex);
  }
}

TEST_CASE("link") {
  const Relabeled l = link_of(k3(), vertex_bit(1));
  CHECK(l.complex == SimplicialComplex::build(2, {{1}, {2}}));
  CHECK(l.to_original == std::vector<int>{2, 3});

  // link of a facet is the empty-face complex
  const Relabeled at_facet = link_of(k3(), 0b011);
  CHECK(at_facet.complex.is_empty());
  CHECK(at_facet.complex.f_vector().entries() == std::vector<long long>{1});

  // link of the empty face is the complex itself
  CHECK(link_of(mixed4(), 0).complex == mixed4());

  CHECK(code_of([] { link_of(path3(), 0b101); }) == Errc::not_a_face);
}

TEST_CASE("link commutes with restriction on small graphs") {
  for (const SimplicialComplex& c : testsupport::all_graph_complexes(4)) {
    const int n = c.vertex_count();
    for (int v = 1; v <= n; ++v) {
      const Mask f = vertex_bit(v);
      for (Mask w = 1; w < (Mask{1} << n); ++w) {
        if (w & f) continue;
        // faces of link(c, v) inside w == faces of link(c|_{w+v}, v)
        std::set<Mask> lhs;
        for (Mask face : testsupport::faces_in_original(link_of(c, f)))
          if ((face & w) == face) lhs.insert(face);
        const Relabeled r = restrict_to(c, w | f);
        Mask f_new = 0;
        for (size_t i = 0; i < r.to_original.size(); ++i)
          if (r.to_original[i] == v) f_new = Mask{1} << i;
        std::set<Mask> rhs;
        if (r.complex.contains(f_new)) {
          const Relabeled inner = link_of(r.complex, f_new);
          for (Mask face : inner.complex.all_faces()) {
            Mask orig = 0;
            Mask rest = face;
            while (rest) {
              const int u = std::countr_zero(rest);
              rest &= rest - 1;
              orig |= vertex_bit(
                  r.to_original[static_cast<size_t>(inner.to_original[u] - 1)]);
            }
            rhs.insert(orig);
          }
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("cone and skeleton") {
  const SimplicialComplex two_pts = SimplicialComplex::build(2, {{1}, {2}});
  CHECK(cone(two_pts) == SimplicialComplex::build(3, {{1, 3}, {2, 3}}));

  // cone over the empty complex is a point
  CHECK(cone(SimplicialComplex::empty_complex()) ==
        SimplicialComplex::build(1, {{1}}));

  const SimplicialComplex solid4 = SimplicialComplex::build(4, {{1, 2, 3, 4}});
  CHECK(skeleton(solid4, 1) == SimplicialComplex::complete_graph(4));
  CHECK(skeleton(solid4, 0) ==
        SimplicialComplex::build(4, {{1}, {2}, {3}, {4}}));

  CHECK(code_of([&] { skeleton(solid4, 4); }) == Errc::bad_skeleton_dim);
  CHECK(code_of([&] { skeleton(solid4, -1); }) == Errc::bad_skeleton_dim);

  CHECK(cone_skeleton1(two_pts) ==
        SimplicialComplex::build(3, {{1, 3}, {2, 3}}));
}

TEST_CASE("cone then deleting the apex gives the complex back") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const SimplicialComplex c = testsupport::random_complex(rng, n, 3);
    const SimplicialComplex coned = cone(c);
    CHECK(restrict_to(coned, full_mask(n)).complex == c);
    // the apex is joined to everything
    CHECK(coned.adjacency()[static_cast<size_t>(n)] == full_mask(n));
  }
}

TEST_CASE("skeleton commutes with restriction") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const SimplicialComplex c = testsupport::random_complex(rng, n, 4);
    if (c.dim() < 1) continue;
    const int k = static_cast<int>(rng() % static_cast<unsigned>(c.dim()));
    const Mask w = 1 + static_cast<Mask>(rng() % full_mask(n));
    const Relabeled r = restrict_to(c, w);
    if (r.complex.dim() < k) continue;
    CHECK(restrict_to(skeleton(c, k), w).complex == skeleton(r.complex, k));
  }
}

TEST_CASE("JSON interchange") {
  const SimplicialComplex m = mixed4();
  const nlohmann::json j = complex_to_json(m);
  CHECK(j["n"] == 4);
  CHECK(j["facets"] ==
        nlohmann::json::parse("[[1,2],[1,3],[2,3,4]]"));
  CHECK(complex_from_json(j) == m);

  CHECK(complex_from_json_text("{\"n\":3,\"facets\":[[1,2],[1,3],[2,3]]}") ==
        k3());
  CHECK(code_of([] { complex_from_json_text("{"); }) == Errc::bad_input);
  CHECK(code_of([] { complex_from_json_text("{\"n\":2}"); }) ==
        Errc::bad_input);
  CHECK(code_of([] {
          complex_from_json_text("{\"n\":3,\"facets\":[[1,2]]}");
        }) == Errc::ghost_vertex);
}

TEST_CASE("h-vector parsing and trimming") {
  CHECK(HVector::parse("1,4,7").entries() == std::vector<long long>{1, 4, 7});
  CHECK(HVector::parse("1, 5, 0").trimmed() == std::vector<long long>{1, 5});
  CHECK(code_of([] { HVector::parse("2,1"); }) == Errc::malformed_hvector);
  CHECK(HVector({1, 0, 0}).trimmed() == std::vector<long long>{1});
}
