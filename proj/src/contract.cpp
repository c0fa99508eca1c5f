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
#include <array>
#include <utility>
#include <vector>

#include "fullerene/error.hpp"
#include "fullerene/hamilton.hpp"

namespace fullerene {

Contraction contract_ring_mapped(const NanotubeDecomposition& d) {
  if (d.r < 1) throw Error(ErrorCode::kNoRings, "contract_ring needs r >= 1");
  auto rotation = d.graph.rotation();

  auto replace = [&](Vertex v, Vertex from, Vertex to) {
    auto& slots = rotation[v];
    *std::find(slots.begin(), slots.end(), from) = to;
  };
  for (int j = 0; j < 5; ++j) {
    const Vertex top = d.at(0, 2 * j);
    const Vertex x = d.at(1, 2 * j - 1);
    // Third neighbour of x: v_2^{2j-1}, or the cap-B centre when r = 1.
    Vertex y = -1;
    for (Vertex w : d.graph.neighbors(x)) {
      if (w != d.at(1, 2 * j - 2) && w != d.at(1, 2 * j)) y = w;
    }
    replace(top, d.at(1, 2 * j), y);
    replace(y, x, top);
  }

  std::vector<char> dropped(d.graph.order(), 0);
  for (Vertex v : d.cycles[1]) dropped[v] = 1;
  std::vector<Vertex> renumber(d.graph.order(), -1);
  Contraction out;
  for (Vertex v = 0; v < d.graph.order(); ++v) {
    if (dropped[v]) continue;
    renumber[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<std::vector<Vertex>> compact;
  compact.reserve(out.original.size());
  for (Vertex v : out.original) {
    auto slots = rotation[v];
    for (Vertex& w : slots) w = renumber[w];
    compact.push_back(std::move(slots));
  }

  std::vector<std::array<Vertex, 10>> cycles(d.r);
  for (int k = 0; k < 10; ++k) cycles[0][k] = renumber[d.at(0, k)];
  for (int i = 1; i < d.r; ++i) {
    for (int k = 0; k < 10; ++k) cycles[i][k] = renumber[d.at(i + 1, k - 1)];
  }
  out.contracted =
      assemble_decomposition(EmbeddedGraph(std::move(compact)), std::move(cycles));
  return out;
}

NanotubeDecomposition contract_ring(const NanotubeDecomposition& d) {
  return contract_ring_mapped(d).contracted;
}

}  // namespace fullerene
