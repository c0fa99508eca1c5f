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

#ifndef FULLERENE_RINGS_HPP_
#define FULLERENE_RINGS_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

// A ring of faces f_0..f_{m-1}, f_i sharing exactly one edge (links[i]) with
// f_{i+1} and no edge with any other ring face. Its boundary splits into
// the inner cycle C and the outer cycle C'.
//
// Which boundary is "inner" is a labelling convention: the outer cycle is the
// one whose far side holds FaceMap::designated_outer(). When that face sits in
// the ring itself, the inner cycle is the one with fewer faces beyond it, then
// the shorter one, then the one holding the smaller vertex id.
struct FaceRing {
  std::vector<FaceId> faces;
  std::vector<Edge> links;
  std::vector<Vertex> inner_cycle;
  std::vector<Vertex> outer_cycle;

  std::size_t inner_length() const { return inner_cycle.size(); }
  std::size_t outer_length() const { return outer_cycle.size(); }
};

// Builds a ring from an ordered cyclic face list; nullopt if the faces do not
// form a ring with exactly two boundary cycles.
std::optional<FaceRing> make_face_ring(const EmbeddedGraph& g,
                                       const FaceMap& faces,
                                       std::vector<FaceId> ring_faces);

// The faces around `center`, in boundary order.
std::optional<FaceRing> ring_around_face(const EmbeddedGraph& g,
                                         const FaceMap& faces, FaceId center);

// Every ring of five faces (chordless 5-cycles of the dual).
std::vector<FaceRing> find_face_rings(const EmbeddedGraph& g);

// (j_0 .. j_{m-1}): j_i counts the vertices of f_i on the chosen boundary
// cycle whose third edge leaves the ring on the far side of that cycle.
struct RingType {
  std::vector<int> js;

  // Lexicographically least tuple over all rotations and reflections.
  RingType canonical() const;
  std::string str() const;  // e.g. "(11111)"

  bool operator==(const RingType&) const = default;
};

enum class RingSide { kInner, kOuter };

RingType ring_type(const EmbeddedGraph& g, const FaceRing& ring, RingSide side);

enum class RingArm { kInnerIsFace, kOuterIsFace, kAllHexTenTen };

std::string_view ring_arm_name(RingArm arm);

// Either C or C' bounds a face, or all five faces are hexagons and both
// cycles have length 10. Throws kDichotomyViolated otherwise.
RingArm check_ring_dichotomy(const EmbeddedGraph& g, const FaceRing& ring);

struct Pentacap {
  FaceId center = 0;
  std::array<FaceId, 5> petals{};
  std::vector<Vertex> vertices;  // sorted, 15 of them
  std::vector<Vertex> boundary;  // the outer 10-cycle

  bool operator==(const Pentacap&) const = default;
};

// Every pentagon whose five neighbouring faces are pentagons.
std::vector<Pentacap> find_pentacaps(const EmbeddedGraph& g);

// Pentacap centred on a given pentagonal face; nullopt if a petal is not a
// pentagon.
std::optional<Pentacap> pentacap_at(const EmbeddedGraph& g,
                                    const FaceMap& faces, FaceId center);

// Two pentacaps joined by r rings of five hexagons, with coordinates
// cycles[i][j] = v_i^j on the boundary cycles C_0..C_r. Spokes join v_i^j and
// v_{i+1}^j exactly when j = i (mod 2). center_a[k] is the cap-A centre
// vertex adjacent to v_0^{2k+1}; center_b[k] the cap-B centre vertex adjacent
// to v_r^{2k + (r mod 2)}. For r = 0 (the dodecahedron) the caps share C_0.
struct NanotubeDecomposition {
  EmbeddedGraph graph;
  int r = 0;
  std::vector<std::array<Vertex, 10>> cycles;
  std::array<Vertex, 5> center_a{};
  std::array<Vertex, 5> center_b{};
  Pentacap cap_a;
  Pentacap cap_b;
  // Canonical type of each ring met while descending from the starting
  // nontrivial ring towards both caps.
  std::vector<RingType> descent_log;

  Vertex at(int i, int j) const { return cycles[i][((j % 10) + 10) % 10]; }
};

// Checks the coordinate structure on g and fills in centres and caps.
// Throws kInconsistentStructure if anything does not fit.
NanotubeDecomposition assemble_decomposition(
    EmbeddedGraph g, std::vector<std::array<Vertex, 10>> cycles);

// Decomposition witness: descends from a nontrivial ring of five faces to both
// pentacaps. The dodecahedron gives r = 0. nullopt when g has only trivial
// cyclic 5-cutsets (and is not the dodecahedron). Coordinates: cap A is the
// cap holding the smaller vertex id, v_0^0 the smallest-id vertex of C_0
// attached away from cap A, v_0^1 the smaller of its two cycle neighbours.
std::optional<NanotubeDecomposition> nanotube_decomposition(
    const EmbeddedGraph& g);

// Names of faces in nanotube coordinates: "A" / "A<k>" centre and petals of
// cap A, "H<i>.<k>" the k-th hexagon of ring i (between C_i and C_{i+1}),
// "B" / "B<k>" for cap B.
struct FaceLabel {
  enum class Kind { kCenterA, kPetalA, kHexagon, kCenterB, kPetalB };
  Kind kind = Kind::kCenterA;
  int ring = 0;
  int k = 0;

  static FaceLabel parse(std::string_view text);
  std::string str() const;
  bool is_pentagon() const { return kind != Kind::kHexagon; }
  bool on_cap_a() const {
    return kind == Kind::kCenterA || kind == Kind::kPetalA;
  }
  bool on_cap_b() const {
    return kind == Kind::kCenterB || kind == Kind::kPetalB;
  }
  bool operator==(const FaceLabel&) const = default;
};

std::vector<Vertex> face_vertices(const NanotubeDecomposition& d,
                                  FaceLabel label);
FaceId face_id(const NanotubeDecomposition& d, const FaceMap& faces,
               FaceLabel label);
FaceLabel label_of(const NanotubeDecomposition& d, const FaceMap& faces,
                   FaceId face);

}  // namespace fullerene

#endif  // FULLERENE_RINGS_HPP_
