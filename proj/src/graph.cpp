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

#include "fullerene/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "fullerene/error.hpp"

namespace fullerene {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonCubic: return "NonCubic";
    case ErrorCode::kTraversalDiverged: return "TraversalDiverged";
    case ErrorCode::kAcyclic: return "Acyclic";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kBadCycle: return "BadCycle";
    case ErrorCode::kDichotomyViolated: return "DichotomyViolated";
    case ErrorCode::kInconsistentStructure: return "InconsistentStructure";
    case ErrorCode::kNoRings: return "NoRings";
    case ErrorCode::kNotSingleCycle: return "NotSingleCycle";
    case ErrorCode::kNotSpanning: return "NotSpanning";
    case ErrorCode::kPatternMismatch: return "PatternMismatch";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kOddCycle: return "OddCycle";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kRotationInconsistent: return "RotationInconsistent";
    case ErrorCode::kBadHeader: return "BadHeader";
    case ErrorCode::kTruncatedRecord: return "TruncatedRecord";
  }
  return "Unknown";
}

EmbeddedGraph::EmbeddedGraph(std::vector<std::vector<Vertex>> rotation)
    : rotation_(std::move(rotation)) {
  const int n = order();
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto& nb = rotation_[v];
    degree_sum += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex u = nb[i];
      if (u < 0 || u >= n) {
        throw Error(ErrorCode::kRotationInconsistent,
                    "vertex " + std::to_string(v) + " lists out-of-range neighbour " +
                        std::to_string(u));
      }
      if (u == v) {
        throw Error(ErrorCode::kRotationInconsistent,
                    "loop at vertex " + std::to_string(v));
      }
      if (std::count(nb.begin(), nb.end(), u) != 1) {
        throw Error(ErrorCode::kRotationInconsistent,
                    "repeated neighbour " + std::to_string(u) + " at vertex " +
                        std::to_string(v));
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : rotation_[v]) {
      const auto& back = rotation_[u];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(ErrorCode::kRotationInconsistent,
                    "edge " + std::to_string(v) + "-" + std::to_string(u) +
                        " is not symmetric");
      }
    }
  }
  edge_count_ = degree_sum / 2;
}

EmbeddedGraph EmbeddedGraph::FromFaces(
    int order, const std::vector<std::vector<Vertex>>& faces) {
  // Directed occurrences of every edge: (face, forward?) per face traversal.
  struct Use {
    std::size_t face;
    Vertex from;
  };
  std::map<Edge, std::vector<Use>> uses;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& b = faces[f];
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Vertex a = b[i];
      const Vertex c = b[(i + 1) % b.size()];
      uses[Edge(a, c)].push_back({f, a});
    }
  }
  for (const auto& [e, list] : uses) {
    if (list.size() != 2) {
      throw Error(ErrorCode::kRotationInconsistent,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                      " does not lie on exactly two faces");
    }
  }

  // Flip faces so that every edge is traversed once in each direction.
  std::vector<int> flip(faces.size(), -1);
  for (std::size_t root = 0; root < faces.size(); ++root) {
    if (flip[root] != -1) continue;
    flip[root] = 0;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t f = queue.front();
      queue.pop();
      const auto& b = faces[f];
      for (std::size_t i = 0; i < b.size(); ++i) {
        const Edge e(b[i], b[(i + 1) % b.size()]);
        for (const Use& use : uses[e]) {
          if (use.face == f) continue;
          // Direction of e in f after orientation, and in the other face
          // before orientation; they must disagree.
          const bool f_forward = (use.from == b[i]) == (flip[f] == 0);
          const int wanted = f_forward ? 1 : 0;
          if (flip[use.face] == -1) {
            flip[use.face] = wanted;
            queue.push(use.face);
          } else if (flip[use.face] != wanted) {
            throw Error(ErrorCode::kRotationInconsistent,
                        "faces cannot be oriented consistently");
          }
        }
      }
    }
  }

  // From consecutive u -> v -> w along an oriented face, w precedes u at v.
  std::vector<std::map<Vertex, Vertex>> next(order);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    std::vector<Vertex> b = faces[f];
    if (flip[f] == 1) std::reverse(b.begin(), b.end());
    const std::size_t len = b.size();
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex u = b[i];
      const Vertex v = b[(i + 1) % len];
      const Vertex w = b[(i + 2) % len];
      next[v][w] = u;
    }
  }
  std::vector<std::vector<Vertex>> rotation(order);
  for (Vertex v = 0; v < order; ++v) {
    if (next[v].empty()) continue;
    const Vertex start = next[v].begin()->first;
    Vertex cur = start;
    do {
      rotation[v].push_back(cur);
      auto it = next[v].find(cur);
      if (it == next[v].end() || rotation[v].size() > next[v].size()) {
        throw Error(ErrorCode::kRotationInconsistent,
                    "faces around vertex " + std::to_string(v) +
                        " do not close up");
      }
      cur = it->second;
    } while (cur != start);
    if (rotation[v].size() != next[v].size()) {
      throw Error(ErrorCode::kRotationInconsistent,
                  "vertex " + std::to_string(v) + " is pinched");
    }
  }
  return EmbeddedGraph(std::move(rotation));
}

int EmbeddedGraph::slot_of(Vertex v, Vertex u) const {
  const auto& nb = rotation_[v];
  const auto it = std::find(nb.begin(), nb.end(), u);
  if (it == nb.end()) {
    throw Error(ErrorCode::kUnknownEdge,
                std::to_string(v) + "-" + std::to_string(u));
  }
  return static_cast<int>(it - nb.begin());
}

bool EmbeddedGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= order()) return false;
  const auto& nb = rotation_[a];
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

std::vector<Edge> EmbeddedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < order(); ++v) {
    for (Vertex u : rotation_[v]) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vertex EmbeddedGraph::rotation_next(Vertex v, Vertex u) const {
  const auto& nb = rotation_[v];
  return nb[(slot_of(v, u) + 1) % nb.size()];
}

Vertex EmbeddedGraph::rotation_prev(Vertex v, Vertex u) const {
  const auto& nb = rotation_[v];
  return nb[(slot_of(v, u) + nb.size() - 1) % nb.size()];
}

EmbeddedGraph EmbeddedGraph::reflected() const {
  auto rotation = rotation_;
  for (auto& nb : rotation) std::reverse(nb.begin(), nb.end());
  return EmbeddedGraph(std::move(rotation));
}

namespace {

// Face tracing for any degree; trace_faces adds the cubic precondition.
std::vector<Face> trace_any(const EmbeddedGraph& g) {
  const int n = g.order();
  std::vector<std::size_t> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
  std::vector<char> used(offset[n], 0);
  auto dart = [&](Vertex from, Vertex to) {
    const auto nb = g.neighbors(from);
    return offset[from] + (std::find(nb.begin(), nb.end(), to) - nb.begin());
  };

  std::vector<Face> faces;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (used[dart(v, u)]) continue;
      Face face;
      Vertex from = v;
      Vertex to = u;
      const std::size_t limit = offset[n];
      while (true) {
        const std::size_t d = dart(from, to);
        if (used[d]) {
          if (from == v && to == u) break;
          throw Error(ErrorCode::kTraversalDiverged,
                      "dart " + std::to_string(from) + "->" +
                          std::to_string(to) + " consumed twice");
        }
        used[d] = 1;
        face.boundary.push_back(from);
        if (face.boundary.size() > limit) {
          throw Error(ErrorCode::kTraversalDiverged, "face does not close");
        }
        const Vertex w = g.rotation_prev(to, from);
        from = to;
        to = w;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

bool connected_without(const EmbeddedGraph& g, Vertex skip_a, Vertex skip_b) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  if (skip_a >= 0) seen[skip_a] = 1;
  if (skip_b >= 0) seen[skip_b] = 1;
  Vertex start = -1;
  int remaining = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining == 0) return true;
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == remaining;
}

}  // namespace

std::vector<Face> trace_faces(const EmbeddedGraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorCode::kNonCubic, "vertex " + std::to_string(v) +
                                            " has degree " +
                                            std::to_string(g.degree(v)));
    }
  }
  return trace_any(g);
}

bool DualGraph::adjacent(FaceId a, FaceId b) const {
  return multiplicity(a, b) > 0;
}

int DualGraph::multiplicity(FaceId a, FaceId b) const {
  return static_cast<int>(shared(a, b).size());
}

std::span<const Edge> DualGraph::shared(FaceId a, FaceId b) const {
  const auto it = shared_edges.find({std::min(a, b), std::max(a, b)});
  if (it == shared_edges.end()) return {};
  return it->second;
}

DualGraph dual_graph(std::span<const Face> faces) {
  std::map<Edge, std::vector<FaceId>> owners;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& b = faces[f].boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      owners[Edge(b[i], b[(i + 1) % b.size()])].push_back(static_cast<FaceId>(f));
    }
  }
  DualGraph dual;
  dual.adjacency.resize(faces.size());
  for (const auto& [e, fs] : owners) {
    if (fs.size() != 2 || fs[0] == fs[1]) continue;
    const FaceId a = std::min(fs[0], fs[1]);
    const FaceId b = std::max(fs[0], fs[1]);
    auto& list = dual.shared_edges[{a, b}];
    if (list.empty()) {
      dual.adjacency[a].push_back(b);
      dual.adjacency[b].push_back(a);
    }
    list.push_back(e);
  }
  for (auto& nb : dual.adjacency) std::sort(nb.begin(), nb.end());
  return dual;
}

std::vector<std::vector<FaceId>> chordless_dual_cycles(const DualGraph& dual,
                                                       int length) {
  std::vector<std::vector<FaceId>> out;
  const int count = static_cast<int>(dual.size());
  std::vector<FaceId> path;
  std::vector<char> on_path(count, 0);

  // Extends `path` (rooted at its smallest face) one face at a time; a new
  // face may touch only its predecessor, except that the last face must also
  // touch the root.
  auto extend = [&](auto&& self) -> void {
    const FaceId root = path.front();
    const FaceId last = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (dual.adjacent(last, root) && path[1] < last) out.push_back(path);
      return;
    }
    for (FaceId next : dual.adjacency[last]) {
      if (next <= root || on_path[next]) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) {
        if (i == 0 && static_cast<int>(path.size()) + 1 == length) continue;
        chord = dual.adjacent(path[i], next);
      }
      if (chord) continue;
      path.push_back(next);
      on_path[next] = 1;
      self(self);
      on_path[next] = 0;
      path.pop_back();
    }
  };

  for (FaceId root = 0; root < count; ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    extend(extend);
    on_path[root] = 0;
  }
  return out;
}

FaceMap::FaceMap(const EmbeddedGraph& g) : faces_(trace_faces(g)) {
  dual_ = dual_graph(faces_);
  vertex_faces_.resize(g.order());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& b = faces_[f].boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Vertex from = b[i];
      const Vertex to = b[(i + 1) % b.size()];
      vertex_faces_[from].push_back(static_cast<FaceId>(f));
      auto [it, inserted] = edge_faces_.try_emplace(
          Edge(from, to), static_cast<FaceId>(-1), static_cast<FaceId>(-1));
      (from < to ? it->second.first : it->second.second) =
          static_cast<FaceId>(f);
    }
    std::vector<Vertex> key = b;
    std::sort(key.begin(), key.end());
    by_vertex_set_.emplace(std::move(key), static_cast<FaceId>(f));
  }
  designated_outer_ = 0;
  std::vector<Vertex> best;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    std::vector<Vertex> key = faces_[f].boundary;
    std::sort(key.begin(), key.end());
    const auto& cur = faces_[designated_outer_];
    if (f == 0 || faces_[f].length() > cur.length() ||
        (faces_[f].length() == cur.length() && key < best)) {
      designated_outer_ = static_cast<FaceId>(f);
      best = std::move(key);
    }
  }
}

std::pair<FaceId, FaceId> FaceMap::faces_of(Edge e) const {
  const auto it = edge_faces_.find(e);
  if (it == edge_faces_.end()) {
    throw Error(ErrorCode::kUnknownEdge,
                std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  return it->second;
}

std::optional<FaceId> FaceMap::find(std::vector<Vertex> vertices) const {
  std::sort(vertices.begin(), vertices.end());
  const auto it = by_vertex_set_.find(vertices);
  if (it == by_vertex_set_.end()) return std::nullopt;
  return it->second;
}

bool FullereneReport::is_fullerene() const {
  return is_cubic && is_connected && is_planar_embedding && is_3_connected &&
         other_face_count == 0 && pentagon_count == 12 && girth == 5;
}

bool is_connected(const EmbeddedGraph& g) { return connected_without(g, -1, -1); }

bool is_3_connected(const EmbeddedGraph& g) {
  const int n = g.order();
  if (n < 4 || !is_connected(g)) return false;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!connected_without(g, a, b)) return false;
    }
  }
  return true;
}

int girth(const EmbeddedGraph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      if (best >= 0 && 2 * dist[v] >= best) break;
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push(u);
        } else if (u != parent[v]) {
          const int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) throw Error(ErrorCode::kAcyclic, "graph has no cycle");
  return best;
}

FullereneReport validate_fullerene(const EmbeddedGraph& g) {
  FullereneReport report;
  report.order = g.order();
  report.edge_count = g.edge_count();
  report.is_cubic = g.order() > 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) report.is_cubic = false;
  }
  report.is_connected = g.order() > 0 && is_connected(g);
  try {
    const auto faces = trace_any(g);
    report.face_count = faces.size();
    for (const auto& f : faces) {
      if (f.length() == 5) {
        ++report.pentagon_count;
      } else if (f.length() == 6) {
        ++report.hexagon_count;
      } else {
        ++report.other_face_count;
      }
    }
    const long euler = static_cast<long>(g.order()) -
                       static_cast<long>(g.edge_count()) +
                       static_cast<long>(faces.size());
    report.is_planar_embedding = report.is_connected && euler == 2;
  } catch (const Error&) {
    report.is_planar_embedding = false;
  }
  report.is_3_connected = is_3_connected(g);
  try {
    report.girth = girth(g);
  } catch (const Error&) {
    report.girth = std::nullopt;
  }
  return report;
}

}  // namespace fullerene
