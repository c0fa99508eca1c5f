// Copyright 2026 The Fullerene Cuts Authors.
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

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fullerene/error.hpp"
#include "fullerene/hamilton.hpp"
#include "fullerene/io.hpp"
#include "fullerene/matchings.hpp"
#include "fullerene/rings.hpp"
#include "support/small_graphs.hpp"

namespace fullerene {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParseError;
}

NanotubeDecomposition tube(int r) { return *nanotube_decomposition(nanotube(r)); }

FacePath labelled_path(const NanotubeDecomposition& d,
                       const std::vector<std::string>& labels) {
  const FaceMap faces(d.graph);
  std::vector<FaceId> ids;
  for (const auto& l : labels) ids.push_back(face_id(d, faces, FaceLabel::parse(l)));
  return make_face_path(faces, ids);
}

TEST(MakeFacePath, RecordsSharedEdgesAndPentagons) {
  const auto d = tube(1);
  const auto p = labelled_path(d, {"A", "A4", "H0.4"});
  EXPECT_EQ(p.pentagon_count, 2);
  ASSERT_EQ(p.shared_edges.size(), 2u);
  const FaceMap faces(d.graph);
  EXPECT_EQ(faces.dual().shared(p.faces[0], p.faces[1]).front(), p.shared_edges[0]);
}

TEST(MakeFacePath, RejectsGapsAndRepeats) {
  const auto d = tube(1);
  const FaceMap faces(d.graph);
  const FaceId a = face_id(d, faces, FaceLabel::parse("A"));
  const FaceId b = face_id(d, faces, FaceLabel::parse("B"));
  const FaceId a0 = face_id(d, faces, FaceLabel::parse("A0"));
  EXPECT_EQ(code_of([&] { make_face_path(faces, {a, b}); }), ErrorCode::kNotSingleCycle);
  EXPECT_EQ(code_of([&] { make_face_path(faces, {a, a0, a}); }), ErrorCode::kNotSingleCycle);
  EXPECT_EQ(code_of([&] { make_face_path(faces, {a, 999}); }), ErrorCode::kNotSingleCycle);
}

TEST(FacePathBoundary, DodecahedronSixPentagons) {
  const auto d = tube(0);
  const auto path = labelled_path(d, {"A4", "A0", "A1", "A2", "B3", "B"});
  EXPECT_EQ(path.pentagon_count, 6);
  const auto cycle = face_path_boundary(d.graph, path);
  EXPECT_EQ(cycle.vertices.size(), 20u);
  EXPECT_TRUE(verify_hamilton(d.graph, cycle));
}

TEST(FacePathBoundary, TwoPentagonsMissVertices) {
  const auto d = tube(0);
  EXPECT_EQ(code_of([&] { face_path_boundary(d.graph, labelled_path(d, {"A", "A0"})); }),
            ErrorCode::kNotSpanning);
}

TEST(FacePathBoundary, AnnulusHasTwoBoundaryCycles) {
  const auto d = tube(1);
  const FaceMap faces(d.graph);
  std::vector<FaceId> ring;
  for (int k = 0; k < 5; ++k) {
    ring.push_back(face_id(d, faces, {FaceLabel::Kind::kPetalA, 0, k}));
  }
  FacePath path;
  path.faces = ring;
  EXPECT_EQ(code_of([&] { face_path_boundary(d.graph, path); }),
            ErrorCode::kNotSingleCycle);
}

TEST(CycleFromEdges, CanonicalStart) {
  const auto c = cycle_from_edges({Edge(3, 1), Edge(1, 2), Edge(2, 0), Edge(0, 3)});
  EXPECT_EQ(c.vertices, (std::vector<Vertex>{0, 2, 1, 3}));
  EXPECT_EQ(code_of([] { cycle_from_edges({Edge(0, 1), Edge(1, 2)}); }),
            ErrorCode::kNotSingleCycle);
  EXPECT_EQ(code_of([] {
              cycle_from_edges({Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4),
                                Edge(4, 5), Edge(3, 5)});
            }),
            ErrorCode::kNotSingleCycle);
}

TEST(VerifyHamilton, Negatives) {
  const auto g = nanotube(0);
  const auto good = build_hamilton(tube(0)).cycle;
  ASSERT_TRUE(verify_hamilton(g, good));

  auto missing = good;
  missing.vertices.pop_back();
  EXPECT_FALSE(verify_hamilton(g, missing));

  auto hop = good;
  std::swap(hop.vertices[1], hop.vertices[5]);
  EXPECT_FALSE(verify_hamilton(g, hop));

  auto repeated = good;
  repeated.vertices[3] = repeated.vertices[1];
  EXPECT_FALSE(verify_hamilton(g, repeated));

  EXPECT_FALSE(verify_hamilton(g, HamiltonCycle{}));
}

TEST(ContractRing, OneRingFewer) {
  for (int r = 1; r <= 5; ++r) {
    const auto c = contract_ring(tube(r));
    EXPECT_EQ(c.r, r - 1);
    const auto report = validate_fullerene(c.graph);
    EXPECT_TRUE(report.is_fullerene());
    EXPECT_EQ(report.order, 10 * r + 10);
    EXPECT_EQ(report.hexagon_count, 5 * (r - 1));
    const auto again = nanotube_decomposition(c.graph);
    ASSERT_TRUE(again.has_value());
    EXPECT_EQ(again->r, r - 1);
  }
}

TEST(ContractRing, TwiceFromTwoRings) {
  const auto c = contract_ring(contract_ring(tube(2)));
  EXPECT_EQ(c.graph.order(), 20);
  EXPECT_EQ(c.r, 0);
  EXPECT_EQ(code_of([&] { contract_ring(c); }), ErrorCode::kNoRings);
}

TEST(ContractRing, MapDropsTheFirstTubeCycle) {
  const auto d = tube(3);
  const auto m = contract_ring_mapped(d);
  ASSERT_EQ(m.original.size(), 40u);
  EXPECT_TRUE(std::is_sorted(m.original.begin(), m.original.end()));
  for (Vertex v : m.original) {
    EXPECT_EQ(std::count(d.cycles[1].begin(), d.cycles[1].end(), v), 0);
  }
  // Cap A and C_0 keep their ids.
  for (Vertex v = 0; v < 15; ++v) EXPECT_EQ(m.original[v], v);
}

TEST(BaseTemplate, StoredForSmallTubesOnly) {
  EXPECT_EQ(base_template(0).size(), 6u);
  EXPECT_EQ(base_template(1).size(), 8u);
  EXPECT_EQ(base_template(2).size(), 11u);
  EXPECT_EQ(code_of([] { base_template(3); }), ErrorCode::kPatternMismatch);
}

TEST(BaseTemplate, FirstPathsOfTheSearch) {
  for (int r = 0; r <= 2; ++r) {
    const auto d = tube(r);
    const auto found = find_face_paths(d, 1);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found.front(), base_face_path(d)) << "r = " << r;
  }
}

TEST(CapSplit, ByParity) {
  EXPECT_EQ(cap_split_for(0).cap_a, 4);
  EXPECT_EQ(cap_split_for(0).cap_b, 2);
  EXPECT_EQ(cap_split_for(3).cap_a, 2);
  EXPECT_EQ(cap_split_for(3).cap_b, 2);
}

TEST(BuildHamilton, VerifiedWithParityPentagonCount) {
  for (int r = 0; r <= 8; ++r) {
    const auto d = tube(r);
    const auto w = build_hamilton(d);
    EXPECT_TRUE(verify_hamilton(d.graph, w.cycle)) << "r = " << r;
    EXPECT_EQ(w.cycle.vertices.size(), static_cast<std::size_t>(10 * r + 20));
    EXPECT_EQ(w.path.pentagon_count, r % 2 == 0 ? 6 : 4) << "r = " << r;
    const int hexagons = static_cast<int>(w.path.faces.size()) - w.path.pentagon_count;
    EXPECT_EQ(3 * w.path.pentagon_count + 4 * hexagons + 2, d.graph.order());
  }
}

TEST(BuildHamilton, WorksOnRelabelledInput) {
  const auto d = tube(4);
  const auto contracted = contract_ring(tube(5));
  const auto w = build_hamilton(contracted);
  EXPECT_TRUE(verify_hamilton(contracted.graph, w.cycle));
  EXPECT_EQ(w.path.pentagon_count, 6);
  EXPECT_EQ(d.graph.order(), contracted.graph.order());
}

TEST(ExpandFacePath, EvenStepGainsPentagons) {
  const auto d2 = tube(2);
  const auto lifted = expand_face_path(base_face_path(tube(1)), d2);
  EXPECT_EQ(lifted.pentagon_count, 6);
  EXPECT_TRUE(verify_hamilton(d2.graph, face_path_boundary(d2.graph, lifted)));
}

TEST(ExpandFacePath, OddStepLosesPentagons) {
  const auto d3 = tube(3);
  const auto lifted = expand_face_path(base_face_path(contract_ring(d3)), d3);
  EXPECT_EQ(lifted.pentagon_count, 4);
  EXPECT_TRUE(verify_hamilton(d3.graph, face_path_boundary(d3.graph, lifted)));
}

TEST(ExpandFacePath, FirstOfAllLifts) {
  const auto d = tube(4);
  const auto inner = build_hamilton(contract_ring(d)).path;
  const auto all = expand_face_path_all(inner, d);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(all.front(), expand_face_path(inner, d));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.faces < b.faces;
  }));
}

TEST(ExpandFacePath, RejectsPathsThatDoNotLift) {
  const auto d = tube(3);
  const auto small = contract_ring(d);
  const FaceMap faces(small.graph);
  const auto lone = make_face_path(faces, {face_id(small, faces, FaceLabel::parse("B"))});
  EXPECT_EQ(code_of([&] { expand_face_path(lone, d); }), ErrorCode::kPatternMismatch);
  FacePath out_of_range;
  out_of_range.faces = {1000};
  EXPECT_EQ(code_of([&] { expand_face_path(out_of_range, d); }), ErrorCode::kPatternMismatch);
}

TEST(EnumerateHamiltonVariants, MeetsTheBound) {
  for (int r = 0; r <= 5; ++r) {
    const auto d = tube(r);
    const auto variants = enumerate_hamilton_variants(d);
    EXPECT_GE(BigCount(variants.size()), hamilton_lower_bound(r)) << "r = " << r;
    std::set<std::vector<Edge>> distinct;
    for (const auto& c : variants) {
      EXPECT_TRUE(verify_hamilton(d.graph, c));
      distinct.insert(c.edges());
    }
    EXPECT_EQ(distinct.size(), variants.size());
  }
}

TEST(EnumerateHamiltonVariants, ContainedInExhaustiveSearch) {
  for (int r = 0; r <= 2; ++r) {
    const auto d = tube(r);
    const auto all = all_hamilton_cycles(d.graph);
    const std::set<std::vector<Edge>> known(all.begin(), all.end());
    for (const auto& c : enumerate_hamilton_variants(d)) {
      EXPECT_TRUE(known.count(c.edges())) << "r = " << r;
    }
  }
}

TEST(BruteForceHamilton, DodecahedronHasThirty) {
  const auto g = nanotube(0);
  const auto count = brute_force_hamilton(g);
  EXPECT_EQ(count.count, 30u);
  EXPECT_EQ(count_hamilton_by_chords(g), 30u);
  ASSERT_TRUE(count.witness.has_value());
  EXPECT_TRUE(verify_hamilton(g, *count.witness));
}

TEST(BruteForceHamilton, SmallGraphs) {
  EXPECT_EQ(brute_force_hamilton(testing::path_graph(5)).count, 0u);
  EXPECT_FALSE(brute_force_hamilton(testing::path_graph(5)).witness.has_value());
  EXPECT_EQ(brute_force_hamilton(testing::cycle_graph(9)).count, 1u);
  EXPECT_EQ(brute_force_hamilton(testing::tetrahedron()).count, 3u);
  EXPECT_EQ(brute_force_hamilton(testing::triangular_prism()).count, 3u);
  EXPECT_EQ(brute_force_hamilton(testing::cube()).count, 6u);
  EXPECT_EQ(count_hamilton_by_chords(testing::cube()), 6u);
  EXPECT_EQ(count_hamilton_by_chords(testing::triangular_prism()), 3u);
  EXPECT_EQ(code_of([] { count_hamilton_by_chords(testing::cycle_graph(6)); }),
            ErrorCode::kNonCubic);
}

TEST(BruteForceHamilton, TwoSearchesAgreeOnTubes) {
  for (int r = 1; r <= 2; ++r) {
    const auto g = nanotube(r);
    const auto count = brute_force_hamilton(g).count;
    EXPECT_EQ(count, count_hamilton_by_chords(g));
    EXPECT_EQ(count, all_hamilton_cycles(g).size());
    EXPECT_GE(count, 10u);
  }
}

TEST(BruteForceHamilton, BudgetGuard) {
  EXPECT_EQ(code_of([] { brute_force_hamilton(nanotube(3)); }), ErrorCode::kBudgetExceeded);
  EXPECT_EQ(code_of([] { all_hamilton_cycles(nanotube(0), 10); }), ErrorCode::kBudgetExceeded);
  EXPECT_EQ(code_of([] { count_hamilton_by_chords(nanotube(1), 20); }),
            ErrorCode::kBudgetExceeded);
}

}  // namespace
}  // namespace fullerene
