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
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fullerene/error.hpp"
#include "fullerene/hamilton.hpp"

namespace fullerene {

FacePath make_face_path(const FaceMap& faces, std::vector<FaceId> path) {
  FacePath out;
  std::set<FaceId> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const FaceId f = path[i];
    if (f < 0 || static_cast<std::size_t>(f) >= faces.size() ||
        !seen.insert(f).second) {
      throw Error(ErrorCode::kNotSingleCycle,
                  "face " + std::to_string(f) + " is repeated or unknown");
    }
    if (faces.face(f).length() == 5) ++out.pentagon_count;
    if (i == 0) continue;
    const auto shared = faces.dual().shared(path[i - 1], f);
    if (shared.size() != 1) {
      throw Error(ErrorCode::kNotSingleCycle,
                  "faces " + std::to_string(path[i - 1]) + " and " +
                      std::to_string(f) + " do not share exactly one edge");
    }
    out.shared_edges.push_back(shared.front());
  }
  out.faces = std::move(path);
  return out;
}

std::vector<Edge> HamiltonCycle::edges() const {
  std::vector<Edge> out;
  out.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HamiltonCycle cycle_from_edges(const std::vector<Edge>& edges) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  HamiltonCycle out;
  if (adj.empty()) return out;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() != 2) {
      throw Error(ErrorCode::kNotSingleCycle,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(nbrs.size()) + " on the boundary");
    }
  }
  const Vertex start = adj.begin()->first;
  Vertex prev = start;
  Vertex cur = std::min(adj[start][0], adj[start][1]);
  out.vertices.push_back(start);
  while (cur != start) {
    out.vertices.push_back(cur);
    const auto& nbrs = adj[cur];
    const Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  if (out.vertices.size() != adj.size()) {
    throw Error(ErrorCode::kNotSingleCycle,
                "boundary splits into several cycles");
  }
  return out;
}

HamiltonCycle face_path_boundary(const EmbeddedGraph& g, const FacePath& path) {
  const FaceMap faces(g);
  std::map<Edge, int> uses;
  for (FaceId f : path.faces) {
    const auto& b = faces.face(f).boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      ++uses[Edge(b[i], b[(i + 1) % b.size()])];
    }
  }
  std::vector<Edge> boundary;
  for (const auto& [e, count] : uses) {
    if (count == 1) boundary.push_back(e);
  }
  HamiltonCycle cycle = cycle_from_edges(boundary);
  if (static_cast<int>(cycle.vertices.size()) != g.order()) {
    throw Error(ErrorCode::kNotSpanning,
                "boundary has " + std::to_string(cycle.vertices.size()) +
                    " of " + std::to_string(g.order()) + " vertices");
  }
  return cycle;
}

bool verify_hamilton(const EmbeddedGraph& g, const HamiltonCycle& cycle) {
  const auto n = static_cast<std::size_t>(g.order());
  if (n < 3 || cycle.vertices.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = cycle.vertices[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) return false;
    seen[v] = 1;
    if (!g.has_edge(v, cycle.vertices[(i + 1) % n])) return false;
  }
  return true;
}

}  // namespace fullerene
