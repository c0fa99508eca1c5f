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
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "fullerene/connectivity.hpp"
#include "fullerene/error.hpp"
#include "fullerene/io.hpp"
#include "fullerene/rings.hpp"
#include "support/leapfrog.hpp"
#include "support/small_graphs.hpp"

namespace fullerene {
namespace {

std::vector<Edge> spokes(int i) {
  std::vector<Edge> out;
  for (int j = i % 2; j < 10; j += 2) {
    out.emplace_back(nanotube_cycle_vertex(i, j), nanotube_cycle_vertex(i + 1, j));
  }
  return out;
}

std::set<std::vector<Edge>> edge_sets(const std::vector<EdgeCutset>& cuts) {
  std::set<std::vector<Edge>> out;
  for (const auto& c : cuts) out.insert(c.edges);
  return out;
}

TEST(IsCyclicCutset, EdgesLeavingAPentagonAreTrivial) {
  const auto g = nanotube(0);
  // Cap-A centre is the pentagon 0..4; each of its vertices has one edge out.
  std::vector<Edge> out;
  for (Vertex v = 0; v < 5; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (w >= 5) out.emplace_back(v, w);
    }
  }
  const auto cut = is_cyclic_cutset(g, out);
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(cut->k, 5);
  EXPECT_EQ(cut->classification, CutsetClass::kTrivial);
  EXPECT_EQ(cut->side_a, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(cut->side_b.size(), 15u);
}

TEST(IsCyclicCutset, SpokesOfATubeAreNontrivial) {
  const auto g = nanotube(1);
  const auto cut = is_cyclic_cutset(g, spokes(0));
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(cut->classification, CutsetClass::kNontrivial);
  EXPECT_EQ(cut->side_a.size(), 15u);
  EXPECT_EQ(cut->side_b.size(), 15u);
}

TEST(IsCyclicCutset, RejectsNonCutsAndUnknownEdges) {
  const auto g = nanotube(1);
  auto some = spokes(0);
  some.pop_back();
  EXPECT_FALSE(is_cyclic_cutset(g, some).has_value());
  EXPECT_FALSE(is_cyclic_cutset(g, std::vector<Edge>{}).has_value());
  try {
    is_cyclic_cutset(g, std::vector<Edge>{Edge(0, 29)});
    FAIL() << "expected UnknownEdge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownEdge);
  }
}

TEST(IsCyclicCutset, AcyclicSideIsNotCyclic) {
  // Cutting the three edges at one vertex isolates it: no cycle on that side.
  const auto g = nanotube(0);
  std::vector<Edge> star;
  for (Vertex w : g.neighbors(7)) star.emplace_back(7, w);
  EXPECT_FALSE(is_cyclic_cutset(g, star).has_value());
}

TEST(ClassifyCutset, HalvesOfTheDodecahedron) {
  const auto g = nanotube(0);
  // Cap-A centre plus its five attachment vertices, against the rest: both
  // sides contain cycles and neither is a bare cycle.
  std::vector<Vertex> a{0, 1, 2, 3, 4};
  for (int k = 0; k < 5; ++k) a.push_back(nanotube_cycle_vertex(0, 2 * k + 1));
  std::sort(a.begin(), a.end());
  std::vector<Vertex> b;
  for (Vertex v = 0; v < 20; ++v) {
    if (!std::binary_search(a.begin(), a.end(), v)) b.push_back(v);
  }
  EXPECT_EQ(classify_cutset(g, a, b, 10), CutsetClass::kNontrivial);
  EXPECT_FALSE(induces_single_cycle(g, a, 10));
}

TEST(InducesSingleCycle, PentagonAndDecagon) {
  const auto g = nanotube(1);
  const std::vector<Vertex> pentagon{0, 1, 2, 3, 4};
  EXPECT_TRUE(induces_single_cycle(g, pentagon, 5));
  EXPECT_FALSE(induces_single_cycle(g, pentagon, 6));
  std::vector<Vertex> c0;
  for (int j = 0; j < 10; ++j) c0.push_back(nanotube_cycle_vertex(0, j));
  std::sort(c0.begin(), c0.end());
  EXPECT_TRUE(induces_single_cycle(g, c0, 10));
  EXPECT_FALSE(induces_single_cycle(g, std::vector<Vertex>{0, 1, 2}, 3));
}

TEST(CyclicEdgeConnectivity, SmallGraphs) {
  EXPECT_EQ(cyclic_edge_connectivity(testing::triangular_prism()), 3);
  EXPECT_EQ(cyclic_edge_connectivity(testing::cube()), 4);
  try {
    cyclic_edge_connectivity(testing::tetrahedron());
    FAIL() << "expected SearchExhausted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchExhausted);
  }
}

TEST(CyclicEdgeConnectivity, FullerenesHaveFive) {
  for (int r = 0; r <= 2; ++r) EXPECT_EQ(cyclic_edge_connectivity(nanotube(r)), 5);
}

TEST(CyclicCutsetsExhaustive, NothingBelowFive) {
  for (int r = 0; r <= 2; ++r) {
    const auto g = nanotube(r);
    for (int k = 1; k <= 4; ++k) {
      EXPECT_TRUE(cyclic_cutsets_exhaustive(g, k).empty()) << "r = " << r << " k = " << k;
    }
  }
}

TEST(CyclicCutsetsExhaustive, BudgetGuard) {
  try {
    cyclic_cutsets_exhaustive(nanotube(3), 5);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  EXPECT_EQ(cyclic_cutsets_exhaustive(nanotube(0), 5, 20).size(), 12u);
}

TEST(FindCyclic5Cutsets, MatchesExhaustiveSearch) {
  for (int r = 0; r <= 2; ++r) {
    const auto g = nanotube(r);
    EXPECT_EQ(edge_sets(find_cyclic_5_cutsets(g)),
              edge_sets(cyclic_cutsets_exhaustive(g, 5)))
        << "r = " << r;
  }
}

TEST(FindCyclic5Cutsets, OneNontrivialCutPerRing) {
  for (int r = 0; r <= 5; ++r) {
    const auto g = nanotube(r);
    const auto cuts = find_cyclic_5_cutsets(g);
    std::set<std::vector<Edge>> nontrivial;
    int trivial = 0;
    for (const auto& c : cuts) {
      if (c.classification == CutsetClass::kTrivial) {
        ++trivial;
      } else {
        nontrivial.insert(c.edges);
      }
    }
    EXPECT_EQ(trivial, 12) << "r = " << r;
    std::set<std::vector<Edge>> expected;
    for (int i = 0; i < r; ++i) {
      auto s = spokes(i);
      std::sort(s.begin(), s.end());
      expected.insert(s);
    }
    EXPECT_EQ(nontrivial, expected) << "r = " << r;
    EXPECT_EQ(has_nontrivial_cyclic_5_cutset(g), r >= 1);
  }
}

TEST(FindCyclic5Cutsets, TrivialCutsSurroundPentagons) {
  for (int r = 0; r <= 4; ++r) {
    const auto g = nanotube(r);
    const FaceMap faces(g);
    for (const auto& c : find_cyclic_5_cutsets(g)) {
      if (c.classification != CutsetClass::kTrivial) continue;
      const auto& small = c.side_a.size() == 5 ? c.side_a : c.side_b;
      ASSERT_EQ(small.size(), 5u);
      const auto f = faces.find(small);
      ASSERT_TRUE(f.has_value());
      EXPECT_EQ(faces.face(*f).length(), 5u);
    }
  }
}

TEST(FindCyclic5Cutsets, IsolatedPentagonFullerenesHaveOnlyTrivialCuts) {
  for (int r = 0; r <= 1; ++r) {
    const auto g = testing::leapfrog(nanotube(r));
    EXPECT_FALSE(has_nontrivial_cyclic_5_cutset(g)) << "leapfrog of r = " << r;
    EXPECT_EQ(find_cyclic_5_cutsets(g).size(), 12u);
  }
}

TEST(FindCyclic5Cutsets, ReflectionInvariant) {
  for (int r = 0; r <= 3; ++r) {
    const auto g = nanotube(r);
    EXPECT_EQ(edge_sets(find_cyclic_5_cutsets(g)),
              edge_sets(find_cyclic_5_cutsets(g.reflected())));
  }
}

TEST(SplitByCycle, PentagonFace) {
  const auto g = nanotube(1);
  const FaceMap faces(g);
  const std::vector<Vertex> pentagon{0, 1, 2, 3, 4};
  const auto sides = split_by_cycle(faces, g, pentagon);
  EXPECT_EQ(sides.inside_faces.size(), 1u);
  EXPECT_EQ(sides.outside_faces.size(), faces.size() - 1);
  EXPECT_TRUE(sides.inside.empty());
  EXPECT_EQ(sides.outside.size(), 25u);
}

TEST(SplitByCycle, RejectsNonCycles) {
  const auto g = nanotube(1);
  const FaceMap faces(g);
  try {
    split_by_cycle(faces, g, std::vector<Vertex>{0, 1, 5});
    FAIL() << "expected BadCycle";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadCycle);
  }
}

TEST(SixPentagonsInside, PentacapBoundaries) {
  for (int r = 0; r <= 5; ++r) {
    const auto g = nanotube(r);
    for (const auto& cap : find_pentacaps(g)) {
      EXPECT_EQ(six_pentagons_inside(g, cap.boundary, CycleSide::kInside), 6);
      EXPECT_EQ(six_pentagons_inside(g, cap.boundary, CycleSide::kOutside), 6);
    }
  }
}

TEST(SixPentagonsInside, RejectsWrongLength) {
  try {
    six_pentagons_inside(nanotube(0), std::vector<Vertex>{0, 1, 2, 3, 4});
    FAIL() << "expected BadCycle";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadCycle);
  }
}

}  // namespace
}  // namespace fullerene
