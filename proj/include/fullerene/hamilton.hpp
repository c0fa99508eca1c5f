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

#ifndef FULLERENE_HAMILTON_HPP_
#define FULLERENE_HAMILTON_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fullerene/graph.hpp"
#include "fullerene/rings.hpp"

namespace fullerene {

// Faces f_0..f_{t-1}, consecutive ones sharing an edge, no repeats.
struct FacePath {
  std::vector<FaceId> faces;
  int pentagon_count = 0;
  std::vector<Edge> shared_edges;  // shared_edges[i] between f_i and f_{i+1}

  bool operator==(const FacePath&) const = default;
};

// Throws kNotSingleCycle if two consecutive faces do not share exactly one
// edge or a face repeats.
FacePath make_face_path(const FaceMap& faces, std::vector<FaceId> path);

struct HamiltonCycle {
  // Cyclic vertex order, starting at the smallest vertex and heading to the
  // smaller of its two cycle neighbours.
  std::vector<Vertex> vertices;

  std::vector<Edge> edges() const;  // sorted
  bool operator==(const HamiltonCycle&) const = default;
};

// Rebuilds the canonical vertex order from a cycle's edge set.
HamiltonCycle cycle_from_edges(const std::vector<Edge>& edges);

// The edges lying on exactly one face of the path. Throws kNotSingleCycle if
// they do not form one cycle and kNotSpanning if that cycle misses vertices.
HamiltonCycle face_path_boundary(const EmbeddedGraph& g, const FacePath& path);

bool verify_hamilton(const EmbeddedGraph& g, const HamiltonCycle& cycle);

// Deletes C_1 and joins v_0^{2j} to v_2^{2j-1} (the cap-B centre when r = 1),
// giving the nanotube with one ring fewer. `original[v]` is the id in the
// input graph of vertex v of the contracted graph. Throws kNoRings if r = 0.
struct Contraction {
  NanotubeDecomposition contracted;
  std::vector<Vertex> original;
};
Contraction contract_ring_mapped(const NanotubeDecomposition& d);
NanotubeDecomposition contract_ring(const NanotubeDecomposition& d);

// Number of cap-A and cap-B pentagons a constructed face path carries:
// (4, 2) for even r, (2, 2) for odd r.
struct CapSplit {
  int cap_a = 0;
  int cap_b = 0;
};
CapSplit cap_split_for(int r);

// Face paths of d bounding a Hamilton cycle with the cap split of d.r, in
// lexicographic face-id order, up to `limit`. Exhaustive; meant for small r.
std::vector<FacePath> find_face_paths(const NanotubeDecomposition& d,
                                      std::size_t limit);

// Stored face paths for r = 0, 1, 2, in nanotube face labels.
std::vector<FaceLabel> base_template(int r);
FacePath base_face_path(const NanotubeDecomposition& d);

// Lifts a face path of contract_ring(d) to d by rewriting it inside the
// contraction zone (cap A plus the rings next to it). Candidates are tried
// in face-id order; the first lift that bounds a Hamilton cycle with the
// cap split of d.r wins. Throws kPatternMismatch if there is none.
FacePath expand_face_path(const FacePath& contracted_path,
                          const NanotubeDecomposition& d);

// Every such lift, in the same order, up to `limit`.
std::vector<FacePath> expand_face_path_all(const FacePath& contracted_path,
                                           const NanotubeDecomposition& d,
                                           std::size_t limit = 64);

struct HamiltonWitness {
  FacePath path;
  HamiltonCycle cycle;
  CapSplit split;
};

// Recursion on r: templates for r <= 2, otherwise contract, recurse and
// expand. The result is checked with face_path_boundary before returning.
HamiltonWitness build_hamilton(const NanotubeDecomposition& d);

// Distinct cycles (as edge sets) reachable from the construction: the
// templates moved by the ten rotations/reflections of the tube, pushed
// through every lift at each expansion step.
std::vector<HamiltonCycle> enumerate_hamilton_variants(
    const NanotubeDecomposition& d);

// Exact Hamilton cycle search, extending a vertex path from vertex 0. Throws
// kBudgetExceeded above max_order vertices.
struct HamiltonCount {
  std::uint64_t count = 0;
  std::optional<HamiltonCycle> witness;
};
HamiltonCount brute_force_hamilton(const EmbeddedGraph& g, int max_order = 40);

// All Hamilton cycles from the same search, each as its sorted edge set.
std::vector<std::vector<Edge>> all_hamilton_cycles(const EmbeddedGraph& g,
                                                   int max_order = 40);

// Independent count for cubic graphs: the chords of a Hamilton cycle form a
// perfect matching, so enumerate perfect matchings and keep those whose
// complement is one spanning cycle.
std::uint64_t count_hamilton_by_chords(const EmbeddedGraph& g,
                                       int max_order = 40);

}  // namespace fullerene

#endif  // FULLERENE_HAMILTON_HPP_
