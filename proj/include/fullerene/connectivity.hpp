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

#ifndef FULLERENE_CONNECTIVITY_HPP_
#define FULLERENE_CONNECTIVITY_HPP_

#include <optional>
#include <span>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

enum class CutsetClass { kTrivial, kNontrivial };

struct EdgeCutset {
  std::vector<Edge> edges;  // sorted
  int k = 0;
  // Vertex sets of the two components, sorted; side_a holds vertex min(V).
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  CutsetClass classification = CutsetClass::kNontrivial;

  bool operator==(const EdgeCutset&) const = default;
};

// Removal must leave exactly two components, each with a nonempty 2-core.
// Throws kUnknownEdge for an edge not in g.
std::optional<EdgeCutset> is_cyclic_cutset(const EmbeddedGraph& g,
                                           std::span<const Edge> edges);

// True iff `side` has k vertices inducing one k-cycle.
bool induces_single_cycle(const EmbeddedGraph& g, std::span<const Vertex> side,
                          int k);

CutsetClass classify_cutset(const EmbeddedGraph& g,
                            std::span<const Vertex> side_a,
                            std::span<const Vertex> side_b, int k);

// Smallest k <= 5 admitting a cyclic k-cutset, by exhaustive search over edge
// subsets. Throws kSearchExhausted if there is none.
int cyclic_edge_connectivity(const EmbeddedGraph& g);

// Every cyclic cutset with exactly k edges (exhaustive subset search).
// Throws kBudgetExceeded when g has more than max_order vertices.
std::vector<EdgeCutset> cyclic_cutsets_exhaustive(const EmbeddedGraph& g, int k,
                                                  int max_order = 40);

// Structural enumeration: the five outgoing edges of every pentagon plus the
// five links of every chordless ring of five faces. Deduplicated, sorted by
// edge list.
std::vector<EdgeCutset> find_cyclic_5_cutsets(const EmbeddedGraph& g);

bool has_nontrivial_cyclic_5_cutset(const EmbeddedGraph& g);

// Both sides of a cycle. The outside is the side holding `outside_face`
// (FaceMap::designated_outer() unless the caller picks one). Ins and Out are
// the vertices strictly inside / outside. Throws kBadCycle if the vertex
// sequence is not a cycle of g.
struct CycleSides {
  std::vector<FaceId> inside_faces;
  std::vector<FaceId> outside_faces;
  std::vector<Vertex> inside;
  std::vector<Vertex> outside;
};
CycleSides split_by_cycle(const FaceMap& faces, const EmbeddedGraph& g,
                          std::span<const Vertex> cycle);
CycleSides split_by_cycle(const FaceMap& faces, const EmbeddedGraph& g,
                          std::span<const Vertex> cycle, FaceId outside_face);

enum class CycleSide { kInside, kOutside };

// Pentagons of g lying in V(C) together with the chosen side of a 10-cycle C
// that has exactly five vertices attached to that side. Throws kBadCycle
// when the precondition fails.
int six_pentagons_inside(const EmbeddedGraph& g, std::span<const Vertex> cycle,
                         CycleSide side = CycleSide::kInside);

}  // namespace fullerene

#endif  // FULLERENE_CONNECTIVITY_HPP_
