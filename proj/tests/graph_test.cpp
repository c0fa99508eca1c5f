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
#include <vector>

#include <gtest/gtest.h>

#include "fullerene/error.hpp"
#include "fullerene/graph.hpp"
#include "fullerene/io.hpp"
#include "support/leapfrog.hpp"
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

std::set<std::vector<Vertex>> face_sets(const EmbeddedGraph& g) {
  std::set<std::vector<Vertex>> out;
  for (auto f : trace_faces(g)) {
    std::sort(f.boundary.begin(), f.boundary.end());
    out.insert(f.boundary);
  }
  return out;
}

TEST(EmbeddedGraph, RejectsBadRotations) {
  using Rotation = std::vector<std::vector<Vertex>>;
  for (const Rotation& bad : {Rotation{{1}, {}}, Rotation{{0}},
                              Rotation{{1, 1}, {0, 0}}, Rotation{{5}, {0}}}) {
    EXPECT_EQ(code_of([&] { EmbeddedGraph{bad}; }), ErrorCode::kRotationInconsistent);
  }
}

TEST(EmbeddedGraph, RotationNavigation) {
  const auto g = testing::tetrahedron();
  for (Vertex v = 0; v < 4; ++v) {
    for (Vertex u : g.neighbors(v)) {
      EXPECT_EQ(g.rotation_prev(v, g.rotation_next(v, u)), u);
    }
  }
  const auto edges = g.edges();
  EXPECT_EQ(edges.size(), 6u);
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}

TEST(TraceFaces, SmallPolyhedra) {
  EXPECT_EQ(trace_faces(testing::tetrahedron()).size(), 4u);
  EXPECT_EQ(trace_faces(testing::triangular_prism()).size(), 5u);
  EXPECT_EQ(trace_faces(testing::cube()).size(), 6u);
}

TEST(TraceFaces, DodecahedronHasTwelvePentagons) {
  const auto faces = trace_faces(nanotube(0));
  ASSERT_EQ(faces.size(), 12u);
  for (const auto& f : faces) EXPECT_EQ(f.length(), 5u);
}

TEST(TraceFaces, NonCubicIsRejected) {
  EXPECT_EQ(code_of([] { trace_faces(testing::cycle_graph(6)); }),
            ErrorCode::kNonCubic);
}

TEST(TraceFaces, ReflectionKeepsFaceSets) {
  for (int r = 0; r <= 4; ++r) {
    const auto g = nanotube(r);
    EXPECT_EQ(face_sets(g), face_sets(g.reflected())) << "r = " << r;
    EXPECT_EQ(g.reflected().reflected(), g);
  }
}

TEST(TraceFaces, EulerFormulaOnCorpus) {
  for (int r = 0; r <= 8; ++r) {
    const auto g = nanotube(r);
    const long f = static_cast<long>(trace_faces(g).size());
    EXPECT_EQ(g.order() - static_cast<long>(g.edge_count()) + f, 2);
  }
}

TEST(FromFaces, RecoversRotationFromTracedFaces) {
  for (int r = 0; r <= 3; ++r) {
    const auto g = nanotube(r);
    std::vector<std::vector<Vertex>> boundaries;
    for (const auto& f : trace_faces(g)) boundaries.push_back(f.boundary);
    const auto rebuilt = EmbeddedGraph::FromFaces(g.order(), boundaries);
    EXPECT_EQ(face_sets(rebuilt), face_sets(g));
  }
}

TEST(DualGraph, DodecahedronDualIsIcosahedron) {
  const FaceMap faces(nanotube(0));
  const auto& dual = faces.dual();
  ASSERT_EQ(dual.size(), 12u);
  for (FaceId f = 0; f < 12; ++f) {
    EXPECT_EQ(dual.adjacency[f].size(), 5u);
    for (FaceId h : dual.adjacency[f]) {
      EXPECT_EQ(dual.multiplicity(f, h), 1);
      EXPECT_EQ(dual.shared(f, h).size(), 1u);
    }
  }
  EXPECT_EQ(chordless_dual_cycles(dual, 5).size(), 12u);
}

TEST(FaceMap, EdgeFacesAndLookup) {
  const auto g = nanotube(2);
  const FaceMap faces(g);
  for (const Edge& e : g.edges()) {
    const auto [a, b] = faces.faces_of(e);
    EXPECT_NE(a, b);
    const auto shared = faces.dual().shared(a, b);
    EXPECT_NE(std::find(shared.begin(), shared.end(), e), shared.end());
  }
  for (FaceId f = 0; f < static_cast<FaceId>(faces.size()); ++f) {
    EXPECT_EQ(faces.find(faces.face(f).boundary), f);
  }
  EXPECT_FALSE(faces.find({0, 1, 2}).has_value());
  EXPECT_EQ(faces.face(faces.designated_outer()).length(), 6u);
  for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(faces.faces_at(v).size(), 3u);
}

TEST(Girth, KnownValues) {
  EXPECT_EQ(girth(testing::tetrahedron()), 3);
  EXPECT_EQ(girth(testing::cube()), 4);
  EXPECT_EQ(girth(nanotube(0)), 5);
  EXPECT_EQ(girth(testing::cycle_graph(7)), 7);
  EXPECT_EQ(code_of([] { girth(testing::path_graph(4)); }), ErrorCode::kAcyclic);
}

TEST(Connectivity, ThreeConnectedness) {
  EXPECT_TRUE(is_3_connected(testing::cube()));
  EXPECT_TRUE(is_3_connected(testing::triangular_prism()));
  EXPECT_FALSE(is_3_connected(testing::cycle_graph(6)));
  // Two K4-minus-an-edge blocks joined by two edges: a 2-edge cut.
  const EmbeddedGraph joined({{1, 2, 4}, {0, 2, 3}, {0, 1, 3}, {1, 2, 5},
                              {0, 6, 7}, {3, 6, 7}, {4, 5, 7}, {4, 5, 6}});
  EXPECT_TRUE(is_connected(joined));
  EXPECT_FALSE(is_3_connected(joined));
}

TEST(ValidateFullerene, NanotubesPass) {
  for (int r = 0; r <= 8; ++r) {
    const auto report = validate_fullerene(nanotube(r));
    EXPECT_TRUE(report.is_fullerene()) << "r = " << r;
    EXPECT_EQ(report.order, 10 * r + 20);
    EXPECT_EQ(report.pentagon_count, 12);
    EXPECT_EQ(report.hexagon_count, 5 * r);
    EXPECT_EQ(report.girth, 5);
  }
}

TEST(ValidateFullerene, ReportsFailuresWithoutThrowing) {
  const auto cube = validate_fullerene(testing::cube());
  EXPECT_FALSE(cube.is_fullerene());
  EXPECT_EQ(cube.other_face_count, 6);
  EXPECT_EQ(cube.girth, 4);

  const auto ring = validate_fullerene(testing::cycle_graph(10));
  EXPECT_FALSE(ring.is_cubic);
  EXPECT_FALSE(ring.is_fullerene());

  const auto path = validate_fullerene(testing::path_graph(3));
  EXPECT_FALSE(path.girth.has_value());
  EXPECT_FALSE(path.is_fullerene());

  const auto empty = validate_fullerene(EmbeddedGraph());
  EXPECT_FALSE(empty.is_fullerene());
}

TEST(ValidateFullerene, MirrorImageAndLeapfrog) {
  EXPECT_TRUE(validate_fullerene(nanotube(3).reflected()).is_fullerene());
  const auto c60 = validate_fullerene(testing::leapfrog(nanotube(0)));
  EXPECT_TRUE(c60.is_fullerene());
  EXPECT_EQ(c60.order, 60);
  EXPECT_EQ(c60.hexagon_count, 20);
}

}  // namespace
}  // namespace fullerene
