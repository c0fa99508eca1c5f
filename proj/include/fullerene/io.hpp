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

#ifndef FULLERENE_IO_HPP_
#define FULLERENE_IO_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

// Nanotube fullerene with two pentacaps joined by r rings of five hexagons,
// n = 10r + 20. Vertex layout:
//   0..4            central pentagon of cap A, vertex k adjacent to C_0[2k+1]
//   5 + 10i + j     j-th vertex of boundary cycle C_i, i = 0..r, j = 0..9
//   n-5..n-1        central pentagon of cap B, vertex k adjacent to
//                   C_r[2k + (r mod 2)]
// Spokes between C_i and C_{i+1} sit at positions j with j = i (mod 2).
// r = 0 gives the dodecahedron.
EmbeddedGraph nanotube(int r);

// Id of vertex j on cycle C_i in nanotube(r); j is taken mod 10.
Vertex nanotube_cycle_vertex(int i, int j);

// Text rotation format:
//   # comments run to end of line
//   n
//   v: a b c        (one line per vertex, neighbours counterclockwise)
std::string write_text_rotation(const EmbeddedGraph& g);
EmbeddedGraph read_text_rotation(std::string_view text);

// planar_code: ">>planar_code<<" followed by records. Each record is one
// byte n (n <= 255), then for every vertex its 1-based neighbours in
// rotation order terminated by a 0 byte.
std::string write_planar_code(std::span<const EmbeddedGraph> graphs);
std::vector<EmbeddedGraph> read_planar_code(std::string_view bytes);

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

// Picks the reader from the content: planar_code if the header is present,
// text otherwise.
std::vector<EmbeddedGraph> read_graphs(std::string_view bytes);

}  // namespace fullerene

#endif  // FULLERENE_IO_HPP_
