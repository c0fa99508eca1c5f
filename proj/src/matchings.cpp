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
#include <bit>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "fullerene/error.hpp"
#include "fullerene/matchings.hpp"

namespace fullerene {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

void check_budget(const EmbeddedGraph& g, int max_order) {
  if (g.order() > max_order || g.order() > 64) {
    throw Error(ErrorCode::kBudgetExceeded,
                "order " + std::to_string(g.order()) +
                    " exceeds matching-count limit " + std::to_string(max_order));
  }
}

std::vector<Mask> adjacency_masks(const EmbeddedGraph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
  }
  return adj;
}

BigCount include_exclude(std::vector<Mask>& adj, Mask free) {
  if (free == 0) return 1;
  Vertex pick = -1;
  int best = 65;
  for (Mask rest = free; rest; rest &= rest - 1) {
    const Vertex v = std::countr_zero(rest);
    const int deg = std::popcount(adj[v] & free);
    if (deg == 0) return 0;
    if (deg < best) {
      best = deg;
      pick = v;
    }
  }
  const Vertex w = std::countr_zero(adj[pick] & free);
  BigCount total = include_exclude(adj, free & ~bit(pick) & ~bit(w));
  adj[pick] &= ~bit(w);
  adj[w] &= ~bit(pick);
  total += include_exclude(adj, free);
  adj[pick] |= bit(w);
  adj[w] |= bit(pick);
  return total;
}

BigCount lowest_vertex(const std::vector<Mask>& adj, Mask free,
                       std::unordered_map<Mask, BigCount>& memo) {
  if (free == 0) return 1;
  if (const auto it = memo.find(free); it != memo.end()) return it->second;
  const Vertex v = std::countr_zero(free);
  BigCount total = 0;
  for (Mask options = adj[v] & free; options; options &= options - 1) {
    const Vertex w = std::countr_zero(options);
    total += lowest_vertex(adj, free & ~bit(v) & ~bit(w), memo);
  }
  memo.emplace(free, total);
  return total;
}

Mask all_vertices(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

}  // namespace

bool is_perfect_matching(const EmbeddedGraph& g, const Matching& m) {
  if (2 * m.edges.size() != static_cast<std::size_t>(g.order())) return false;
  std::vector<char> hit(g.order(), 0);
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v)) return false;
    if (hit[e.u] || hit[e.v]) return false;
    hit[e.u] = hit[e.v] = 1;
  }
  return true;
}

std::array<Matching, 3> matchings_from_hamilton(const EmbeddedGraph& g,
                                                const HamiltonCycle& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.size() % 2 != 0) {
    throw Error(ErrorCode::kOddCycle,
                "cycle of odd length " + std::to_string(vs.size()));
  }
  if (!verify_hamilton(g, cycle)) {
    throw Error(ErrorCode::kBadCycle, "not a Hamilton cycle of the graph");
  }
  std::array<Matching, 3> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out[i % 2].edges.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
  }
  const auto on_cycle = cycle.edges();
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(on_cycle.begin(), on_cycle.end(), e)) {
      out[2].edges.push_back(e);
    }
  }
  for (auto& m : out) std::sort(m.edges.begin(), m.edges.end());
  return out;
}

BigCount count_perfect_matchings(const EmbeddedGraph& g, int max_order) {
  check_budget(g, max_order);
  if (g.order() % 2 != 0) return 0;
  auto adj = adjacency_masks(g);
  return include_exclude(adj, all_vertices(g.order()));
}

BigCount count_perfect_matchings_by_vertex(const EmbeddedGraph& g,
                                           int max_order) {
  check_budget(g, max_order);
  if (g.order() % 2 != 0) return 0;
  std::unordered_map<Mask, BigCount> memo;
  return lowest_vertex(adjacency_masks(g), all_vertices(g.order()), memo);
}

BigCount matching_lower_bound(int n) {
  return BigCount(15) << (n / 20);
}

BigCount prior_matching_bound(int n) { return (3 * BigCount(n + 2) + 3) / 4; }

BigCount hamilton_lower_bound(int r) {
  const int exponent = r % 2 == 0 ? r / 2 + 1 : (r + 1) / 2;
  return BigCount(5) << exponent;
}

BoundReport bound_report(const NanotubeDecomposition& d, int max_hamilton_order,
                         int max_matching_order) {
  BoundReport out;
  out.n = d.graph.order();
  out.r = d.r;
  out.hamilton_bound = hamilton_lower_bound(d.r);
  out.matching_bound = matching_lower_bound(out.n);
  out.prior_bound = prior_matching_bound(out.n);
  if (out.n <= max_matching_order && out.n <= 64) {
    out.exact_matchings = count_perfect_matchings(d.graph, max_matching_order);
  }
  if (out.n <= max_hamilton_order) {
    out.exact_hamilton = brute_force_hamilton(d.graph, max_hamilton_order).count;
  }
  const auto cycles = enumerate_hamilton_variants(d);
  out.constructed_cycles = cycles.size();
  std::set<Matching> distinct;
  for (const auto& c : cycles) {
    for (auto& m : matchings_from_hamilton(d.graph, c)) distinct.insert(std::move(m));
  }
  out.constructed_matchings = distinct.size();
  return out;
}

}  // namespace fullerene
