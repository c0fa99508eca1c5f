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

#include "fullerene/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "fullerene/error.hpp"

namespace fullerene {
namespace {

struct DisjointSets {
  std::vector<int> parent;

  void reset(int n) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Calls `visit` for every k-subset of edges whose removal leaves exactly two
// components that each have at least as many edges as vertices (i.e. contain
// a cycle). Stops early when `visit` returns false.
void for_each_cyclic_subset(const EmbeddedGraph& g, int k,
                            const std::function<bool(std::span<const Edge>)>& visit) {
  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int n = g.order();
  if (k < 1 || k > m) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<char> removed(m, 0);
  std::vector<Edge> chosen(k);
  std::vector<int> vcount(n), ecount(n);
  DisjointSets dsu;
  while (true) {
    for (int i : idx) removed[i] = 1;
    dsu.reset(n);
    int components = n;
    for (int e = 0; e < m; ++e) {
      if (!removed[e] && dsu.unite(edges[e].u, edges[e].v)) --components;
    }
    bool hit = false;
    if (components == 2) {
      std::fill(vcount.begin(), vcount.end(), 0);
      std::fill(ecount.begin(), ecount.end(), 0);
      for (Vertex v = 0; v < n; ++v) ++vcount[dsu.find(v)];
      for (int e = 0; e < m; ++e) {
        if (!removed[e]) ++ecount[dsu.find(edges[e].u)];
      }
      hit = true;
      for (Vertex v = 0; v < n; ++v) {
        if (vcount[v] > 0 && ecount[v] < vcount[v]) hit = false;
      }
    }
    for (int i : idx) removed[i] = 0;
    if (hit) {
      for (int i = 0; i < k; ++i) chosen[i] = edges[idx[i]];
      if (!visit(chosen)) return;
    }
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

bool has_nonempty_two_core(const std::vector<std::vector<Vertex>>& adj,
                           std::span<const Vertex> component) {
  std::vector<int> degree(adj.size(), 0);
  std::vector<char> alive(adj.size(), 0);
  for (Vertex v : component) {
    alive[v] = 1;
    degree[v] = static_cast<int>(adj[v].size());
  }
  std::vector<Vertex> stack;
  for (Vertex v : component) {
    if (degree[v] <= 1) stack.push_back(v);
  }
  std::size_t remaining = component.size();
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    --remaining;
    for (Vertex u : adj[v]) {
      if (alive[u] && --degree[u] <= 1) stack.push_back(u);
    }
  }
  return remaining > 0;
}

void require_cycle(const EmbeddedGraph& g, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) throw Error(ErrorCode::kBadCycle, "cycle too short");
  std::set<Vertex> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != len) {
    throw Error(ErrorCode::kBadCycle, "cycle repeats a vertex");
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % len])) {
      throw Error(ErrorCode::kBadCycle,
                  "consecutive vertices " + std::to_string(cycle[i]) + " and " +
                      std::to_string(cycle[(i + 1) % len]) + " not adjacent");
    }
  }
}

}  // namespace

bool induces_single_cycle(const EmbeddedGraph& g, std::span<const Vertex> side,
                          int k) {
  if (static_cast<int>(side.size()) != k || k < 3) return false;
  std::set<Vertex> members(side.begin(), side.end());
  if (static_cast<int>(members.size()) != k) return false;
  for (Vertex v : side) {
    int inner = 0;
    for (Vertex u : g.neighbors(v)) inner += members.count(u) ? 1 : 0;
    if (inner != 2) return false;
  }
  // All degrees are 2; a single cycle iff connected.
  std::set<Vertex> seen{side.front()};
  std::vector<Vertex> stack{side.front()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (members.count(u) && seen.insert(u).second) stack.push_back(u);
    }
  }
  return static_cast<int>(seen.size()) == k;
}

CutsetClass classify_cutset(const EmbeddedGraph& g,
                            std::span<const Vertex> side_a,
                            std::span<const Vertex> side_b, int k) {
  if (induces_single_cycle(g, side_a, k) || induces_single_cycle(g, side_b, k)) {
    return CutsetClass::kTrivial;
  }
  return CutsetClass::kNontrivial;
}

std::optional<EdgeCutset> is_cyclic_cutset(const EmbeddedGraph& g,
                                           std::span<const Edge> edges) {
  std::set<Edge> removed(edges.begin(), edges.end());
  for (const Edge& e : removed) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::kUnknownEdge,
                  std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (!removed.count(Edge(u, v))) adj[v].push_back(u);
    }
  }
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> components;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(components.size());
    components.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      components[id].push_back(v);
      for (Vertex u : adj[v]) {
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
    if (components.size() > 2) return std::nullopt;
  }
  if (components.size() != 2) return std::nullopt;
  for (const auto& c : components) {
    if (!has_nonempty_two_core(adj, c)) return std::nullopt;
  }
  EdgeCutset cut;
  cut.edges.assign(removed.begin(), removed.end());
  cut.k = static_cast<int>(cut.edges.size());
  cut.side_a = std::move(components[0]);
  cut.side_b = std::move(components[1]);
  std::sort(cut.side_a.begin(), cut.side_a.end());
  std::sort(cut.side_b.begin(), cut.side_b.end());
  cut.classification = classify_cutset(g, cut.side_a, cut.side_b, cut.k);
  return cut;
}

int cyclic_edge_connectivity(const EmbeddedGraph& g) {
  for (int k = 1; k <= 5; ++k) {
    bool found = false;
    for_each_cyclic_subset(g, k, [&](std::span<const Edge>) {
      found = true;
      return false;
    });
    if (found) return k;
  }
  throw Error(ErrorCode::kSearchExhausted,
              "no cyclic cutset with at most 5 edges");
}

std::vector<EdgeCutset> cyclic_cutsets_exhaustive(const EmbeddedGraph& g, int k,
                                                  int max_order) {
  if (g.order() > max_order) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exhaustive cutset search limited to n <= " +
                    std::to_string(max_order));
  }
  std::vector<EdgeCutset> out;
  for_each_cyclic_subset(g, k, [&](std::span<const Edge> chosen) {
    auto cut = is_cyclic_cutset(g, chosen);
    if (!cut) {
      throw Error(ErrorCode::kInconsistentStructure,
                  "subset oracle and 2-core test disagree");
    }
    out.push_back(std::move(*cut));
    return true;
  });
  return out;
}

std::vector<EdgeCutset> find_cyclic_5_cutsets(const EmbeddedGraph& g) {
  const FaceMap faces(g);
  std::set<std::vector<Edge>> candidates;
  for (const Face& f : faces.faces()) {
    if (f.length() != 5) continue;
    std::vector<Edge> out;
    for (Vertex v : f.boundary) {
      for (Vertex u : g.neighbors(v)) {
        if (std::find(f.boundary.begin(), f.boundary.end(), u) ==
            f.boundary.end()) {
          out.emplace_back(u, v);
        }
      }
    }
    std::sort(out.begin(), out.end());
    candidates.insert(std::move(out));
  }
  for (const auto& ring : chordless_dual_cycles(faces.dual(), 5)) {
    std::vector<Edge> links;
    bool single = true;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto shared = faces.dual().shared(ring[i], ring[(i + 1) % 5]);
      if (shared.size() != 1) single = false;
      links.insert(links.end(), shared.begin(), shared.end());
    }
    if (!single) continue;
    std::sort(links.begin(), links.end());
    candidates.insert(std::move(links));
  }
  std::vector<EdgeCutset> out;
  for (const auto& edges : candidates) {
    if (auto cut = is_cyclic_cutset(g, edges); cut && cut->k == 5) {
      out.push_back(std::move(*cut));
    }
  }
  return out;
}

bool has_nontrivial_cyclic_5_cutset(const EmbeddedGraph& g) {
  const auto cuts = find_cyclic_5_cutsets(g);
  return std::any_of(cuts.begin(), cuts.end(), [](const EdgeCutset& c) {
    return c.classification == CutsetClass::kNontrivial;
  });
}

CycleSides split_by_cycle(const FaceMap& faces, const EmbeddedGraph& g,
                          std::span<const Vertex> cycle) {
  return split_by_cycle(faces, g, cycle, faces.designated_outer());
}

CycleSides split_by_cycle(const FaceMap& faces, const EmbeddedGraph& g,
                          std::span<const Vertex> cycle, FaceId outside_face) {
  require_cycle(g, cycle);
  std::set<Edge> on_cycle;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    on_cycle.emplace(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  DisjointSets dsu;
  dsu.reset(static_cast<int>(faces.size()));
  for (const Edge& e : g.edges()) {
    if (on_cycle.count(e)) continue;
    const auto [a, b] = faces.faces_of(e);
    dsu.unite(a, b);
  }
  std::set<int> roots;
  for (FaceId f = 0; f < static_cast<FaceId>(faces.size()); ++f) {
    roots.insert(dsu.find(f));
  }
  if (roots.size() != 2) {
    throw Error(ErrorCode::kBadCycle, "cycle does not separate the faces in two");
  }
  CycleSides sides;
  const int outside_root = dsu.find(outside_face);
  for (FaceId f = 0; f < static_cast<FaceId>(faces.size()); ++f) {
    (dsu.find(f) == outside_root ? sides.outside_faces : sides.inside_faces)
        .push_back(f);
  }
  const std::set<Vertex> on_c(cycle.begin(), cycle.end());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (on_c.count(v)) continue;
    const FaceId any = faces.faces_at(v).front();
    (dsu.find(any) == outside_root ? sides.outside : sides.inside).push_back(v);
  }
  return sides;
}

int six_pentagons_inside(const EmbeddedGraph& g, std::span<const Vertex> cycle,
                         CycleSide side) {
  if (cycle.size() != 10) {
    throw Error(ErrorCode::kBadCycle, "expected a 10-cycle, got length " +
                                          std::to_string(cycle.size()));
  }
  const FaceMap faces(g);
  const CycleSides sides = split_by_cycle(faces, g, cycle);
  const bool inside = side == CycleSide::kInside;
  const auto& region = inside ? sides.inside : sides.outside;
  const auto& region_faces = inside ? sides.inside_faces : sides.outside_faces;
  const std::set<Vertex> members(region.begin(), region.end());
  int attached = 0;
  for (Vertex v : cycle) {
    for (Vertex u : g.neighbors(v)) attached += members.count(u) ? 1 : 0;
  }
  if (attached != 5) {
    throw Error(ErrorCode::kBadCycle,
                std::to_string(attached) +
                    " cycle vertices attach to the chosen side, expected 5");
  }
  int pentagons = 0;
  for (FaceId f : region_faces) pentagons += faces.face(f).length() == 5 ? 1 : 0;
  return pentagons;
}

}  // namespace fullerene
