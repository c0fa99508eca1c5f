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

#include <vector>

#include "fullerene/error.hpp"
#include "fullerene/io.hpp"

namespace fullerene {

Vertex nanotube_cycle_vertex(int i, int j) {
  return 5 + 10 * i + ((j % 10) + 10) % 10;
}

EmbeddedGraph nanotube(int r) {
  if (r < 0) throw Error(ErrorCode::kNoRings, "ring count must be >= 0");
  const int n = 10 * r + 20;
  auto v = nanotube_cycle_vertex;
  auto a = [](int k) { return ((k % 5) + 5) % 5; };
  auto e = [n](int k) { return n - 5 + ((k % 5) + 5) % 5; };

  std::vector<std::vector<Vertex>> faces;
  faces.push_back({a(0), a(1), a(2), a(3), a(4)});
  for (int k = 0; k < 5; ++k) {
    faces.push_back(
        {a(k), a(k + 1), v(0, 2 * k + 3), v(0, 2 * k + 2), v(0, 2 * k + 1)});
  }
  for (int i = 0; i < r; ++i) {
    const int p = i % 2;
    for (int k = 0; k < 5; ++k) {
      const int j = 2 * k + p;
      faces.push_back({v(i, j), v(i, j + 1), v(i, j + 2), v(i + 1, j + 2),
                       v(i + 1, j + 1), v(i + 1, j)});
    }
  }
  const int q = r % 2;
  faces.push_back({e(0), e(1), e(2), e(3), e(4)});
  for (int k = 0; k < 5; ++k) {
    const int j = 2 * k + q;
    faces.push_back({e(k), e(k + 1), v(r, j + 2), v(r, j + 1), v(r, j)});
  }
  return EmbeddedGraph::FromFaces(n, faces);
}

}  // namespace fullerene
