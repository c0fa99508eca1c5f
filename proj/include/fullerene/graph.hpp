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

#ifndef FULLERENE_GRAPH_HPP_
#define FULLERENE_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fullerene {

using Vertex = int;
using FaceId = int;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// A graph together with a rotation system: for every vertex the cyclic,
// counterclockwise order of its neighbours. The constructor checks that
// adjacency is symmetric and simple; it does not require degree 3, so that
// broken inputs can still be diagnosed by validate_fullerene.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  explicit EmbeddedGraph(std::vector<std::vector<Vertex>> rotation);

  // Builds the rotation system of a 2-cell embedding from its face
  // boundaries. Face orientations are made consistent first, so the caller
  // may list each face in either direction.
  static EmbeddedGraph FromFaces(int order,
                                 const std::vector<std::vector<Vertex>>& faces);

  int order() const { return static_cast<int>(rotation_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotation() const { return rotation_; }

  bool has_edge(Vertex a, Vertex b) const;
  std::vector<Edge> edges() const;

  // Neighbour following / preceding `u` in the rotation at `v`.
  Vertex rotation_next(Vertex v, Vertex u) const;
  Vertex rotation_prev(Vertex v, Vertex u) const;

  // Mirror image: every rotation reversed.
  EmbeddedGraph reflected() const;

  bool operator==(const EmbeddedGraph&) const = default;

 private:
  int slot_of(Vertex v, Vertex u) const;

  std::vector<std::vector<Vertex>> rotation_;
  std::size_t edge_count_ = 0;
};

struct Face {
  std::vector<Vertex> boundary;

  std::size_t length() const { return boundary.size(); }
};

// Traces the faces of a cubic embedding. From dart u->v the next dart is
// v->w where w immediately precedes u in the rotation at v. Faces are
// emitted in order of their first dart (vertex id, then rotation slot).
std::vector<Face> trace_faces(const EmbeddedGraph& g);

struct DualGraph {
  std::vector<std::vector<FaceId>> adjacency;
  std::map<std::pair<FaceId, FaceId>, std::vector<Edge>> shared_edges;

  std::size_t size() const { return adjacency.size(); }
  bool adjacent(FaceId a, FaceId b) const;
  int multiplicity(FaceId a, FaceId b) const;
  // Edges shared by a and b (empty if not adjacent).
  std::span<const Edge> shared(FaceId a, FaceId b) const;
};

// Two faces are adjacent iff they share at least one edge.
DualGraph dual_graph(std::span<const Face> faces);

// All cycles of the given length in the dual whose faces are adjacent only
// to their two cyclic neighbours (chordless). Each cycle is reported once,
// starting from its smallest face and continuing towards the smaller of the
// two neighbours.
std::vector<std::vector<FaceId>> chordless_dual_cycles(const DualGraph& dual,
                                                       int length);

// Faces of an embedding with the incidence lookups that most algorithms need.
class FaceMap {
 public:
  explicit FaceMap(const EmbeddedGraph& g);

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }
  std::size_t size() const { return faces_.size(); }
  const DualGraph& dual() const { return dual_; }

  // Faces containing edge e; first is the face traced along u->v.
  std::pair<FaceId, FaceId> faces_of(Edge e) const;
  std::span<const FaceId> faces_at(Vertex v) const { return vertex_faces_[v]; }
  std::optional<FaceId> find(std::vector<Vertex> vertices) const;

  // The face that plays the role of the unbounded face when a cycle must be
  // split into inside and outside: maximum length, ties broken by the
  // lexicographically smallest sorted vertex list.
  FaceId designated_outer() const { return designated_outer_; }

 private:
  std::vector<Face> faces_;
  DualGraph dual_;
  std::map<Edge, std::pair<FaceId, FaceId>> edge_faces_;
  std::vector<std::vector<FaceId>> vertex_faces_;
  std::map<std::vector<Vertex>, FaceId> by_vertex_set_;
  FaceId designated_outer_ = 0;
};

struct FullereneReport {
  int order = 0;
  std::size_t edge_count = 0;
  std::size_t face_count = 0;
  bool is_cubic = false;
  bool is_connected = false;
  bool is_planar_embedding = false;
  bool is_3_connected = false;
  int pentagon_count = 0;
  int hexagon_count = 0;
  int other_face_count = 0;
  std::optional<int> girth;

  bool is_fullerene() const;
};

// Never throws on a bad graph; every failure shows up as a flag.
FullereneReport validate_fullerene(const EmbeddedGraph& g);

// Length of a shortest cycle; throws kAcyclic on a forest.
int girth(const EmbeddedGraph& g);

bool is_connected(const EmbeddedGraph& g);

// Exhaustive: deletes every vertex pair and checks the rest stays connected.
bool is_3_connected(const EmbeddedGraph& g);

}  // namespace fullerene

#endif  // FULLERENE_GRAPH_HPP_
