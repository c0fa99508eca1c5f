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
#include <functional>
#include <string>
#include <vector>

#include "fullerene/error.hpp"
#include "fullerene/hamilton.hpp"

namespace fullerene {
namespace {

void check_budget(const EmbeddedGraph& g, int max_order) {
  if (g.order() > max_order) {
    throw Error(ErrorCode::kBudgetExceeded,
                "order " + std::to_string(g.order()) + " exceeds oracle limit " +
                    std::to_string(max_order));
  }
}

// Extends a path from vertex 0, reporting each cycle once: the second vertex
// must be smaller than the last one.
void search_cycles(const EmbeddedGraph& g,
                   const std::function<void(const std::vector<Vertex>&)>& emit) {
  const int n = g.order();
  if (n < 3) return;
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path{0};
  on_path[0] = 1;

  // A vertex off the path needs two neighbours it could still use: ones off
  // the path, the head or vertex 0.
  auto starved = [&](Vertex w, Vertex head) {
    int free = 0;
    for (Vertex x : g.neighbors(w)) {
      if (!on_path[x] || x == head || x == 0) ++free;
    }
    return free < 2;
  };

  std::function<void()> extend = [&] {
    const Vertex head = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (g.has_edge(head, 0) && path[1] < path.back()) emit(path);
      return;
    }
    std::vector<Vertex> next(g.neighbors(head).begin(), g.neighbors(head).end());
    std::sort(next.begin(), next.end());
    for (Vertex u : next) {
      if (on_path[u]) continue;
      on_path[u] = 1;
      path.push_back(u);
      bool ok = true;
      for (Vertex w : g.neighbors(head)) {
        if (!on_path[w] && starved(w, u)) ok = false;
      }
      if (ok) extend();
      path.pop_back();
      on_path[u] = 0;
    }
  };
  extend();
}

}  // namespace

HamiltonCount brute_force_hamilton(const EmbeddedGraph& g, int max_order) {
  check_budget(g, max_order);
  HamiltonCount out;
  search_cycles(g, [&](const std::vector<Vertex>& cycle) {
    if (!out.witness) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
      }
      out.witness = cycle_from_edges(edges);
    }
    ++out.count;
  });
  return out;
}

std::vector<std::vector<Edge>> all_hamilton_cycles(const EmbeddedGraph& g,
                                                   int max_order) {
  check_budget(g, max_order);
  std::vector<std::vector<Edge>> out;
  search_cycles(g, [&](const std::vector<Vertex>& cycle) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_hamilton_by_chords(const EmbeddedGraph& g, int max_order) {
  check_budget(g, max_order);
  const int n = g.order();
  if (n < 4 || n % 2 != 0) return 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorCode::kNonCubic, "chord count needs a cubic graph");
    }
  }
  std::vector<Vertex> mate(n, -1);
  std::uint64_t count = 0;

  auto complement_is_cycle = [&] {
    Vertex prev = -1;
    Vertex cur = 0;
    int steps = 0;
    do {
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur)) {
        if (w != mate[cur] && w != prev) {
          next = w;
          break;
        }
      }
      prev = cur;
      cur = next;
      ++steps;
    } while (cur != 0 && steps <= n);
    return steps == n;
  };

  std::function<void(Vertex)> match = [&](Vertex from) {
    while (from < n && mate[from] != -1) ++from;
    if (from == n) {
      if (complement_is_cycle()) ++count;
      return;
    }
    for (Vertex w : g.neighbors(from)) {
      if (mate[w] != -1) continue;
      mate[from] = w;
      mate[w] = from;
      match(from + 1);
      mate[from] = -1;
      mate[w] = -1;
    }
  };
  match(0);
  return count;
}

}  // namespace fullerene
