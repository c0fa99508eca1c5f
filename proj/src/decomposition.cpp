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
#include <set>
#include <string>

#include "fullerene/connectivity.hpp"
#include "fullerene/error.hpp"
#include "fullerene/rings.hpp"

namespace fullerene {
namespace {

Error inconsistent(const std::string& what) {
  return Error(ErrorCode::kInconsistentStructure, what);
}

bool same_vertex_set(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Neighbour of v that is not in `exclude`; fails unless there is exactly one.
Vertex third_neighbor(const EmbeddedGraph& g, Vertex v,
                      const std::set<Vertex>& exclude) {
  Vertex found = -1;
  for (Vertex u : g.neighbors(v)) {
    if (exclude.count(u)) continue;
    if (found >= 0) throw inconsistent("vertex " + std::to_string(v) +
                                       " has two neighbours off its cycles");
    found = u;
  }
  if (found < 0) throw inconsistent("vertex " + std::to_string(v) +
                                    " has no neighbour off its cycles");
  return found;
}

struct Descent {
  std::vector<std::vector<Vertex>> cycles;  // from the start ring outwards
  FaceId center = -1;
};

// Walks across `boundary` away from `ring`, ring by ring, until a ring of five
// pentagons (a pentacap) is reached.
Descent descend(const EmbeddedGraph& g, const FaceMap& faces, FaceRing ring,
                std::vector<Vertex> boundary, std::vector<RingType>& log) {
  Descent out;
  out.cycles.push_back(boundary);
  for (int guard = 0; guard <= g.order(); ++guard) {
    const RingSide side = same_vertex_set(boundary, ring.inner_cycle)
                              ? RingSide::kInner
                              : RingSide::kOuter;
    log.push_back(ring_type(g, ring, side).canonical());

    const std::set<FaceId> current(ring.faces.begin(), ring.faces.end());
    std::vector<FaceId> next;
    for (std::size_t t = 0; t < boundary.size(); ++t) {
      const auto [a, b] =
          faces.faces_of(Edge(boundary[t], boundary[(t + 1) % boundary.size()]));
      const FaceId far = current.count(a) ? b : a;
      if (std::find(next.begin(), next.end(), far) == next.end()) {
        next.push_back(far);
      }
    }
    if (next.size() != 5) {
      throw inconsistent("cycle of length " + std::to_string(boundary.size()) +
                         " borders " + std::to_string(next.size()) +
                         " faces on its far side");
    }
    auto following = make_face_ring(g, faces, next);
    if (!following) throw inconsistent("faces beyond a ring do not form a ring");
    const auto& far_cycle = same_vertex_set(following->inner_cycle, boundary)
                                ? following->outer_cycle
                                : following->inner_cycle;
    const auto lengths = [&](std::size_t len) {
      return std::all_of(next.begin(), next.end(), [&](FaceId f) {
        return faces.face(f).length() == len;
      });
    };
    if (lengths(5)) {
      const auto center = faces.find(far_cycle);
      if (!center || faces.face(*center).length() != 5) {
        throw inconsistent("ring of pentagons does not surround a pentagon");
      }
      out.center = *center;
      return out;
    }
    if (!lengths(6) || check_ring_dichotomy(g, *following) != RingArm::kAllHexTenTen) {
      throw inconsistent("ring beyond an all-hexagon ring is mixed");
    }
    boundary = far_cycle;
    out.cycles.push_back(boundary);
    ring = std::move(*following);
  }
  throw inconsistent("descent did not terminate");
}

// Lays coordinates on the chain of boundary cycles, cap A side first.
std::vector<std::array<Vertex, 10>> coordinates(
    const EmbeddedGraph& g, const Pentacap& cap_a,
    const std::vector<std::vector<Vertex>>& chain) {
  const std::set<Vertex> in_cap(cap_a.vertices.begin(), cap_a.vertices.end());
  const auto& c0 = chain.front();
  if (c0.size() != 10) throw inconsistent("cap boundary is not a 10-cycle");
  std::set<Vertex> on_c0(c0.begin(), c0.end());

  Vertex start = -1;
  for (Vertex v : c0) {
    bool outward = false;
    for (Vertex u : g.neighbors(v)) {
      if (!in_cap.count(u)) outward = true;
    }
    if (outward && (start < 0 || v < start)) start = v;
  }
  if (start < 0) throw inconsistent("cap boundary has no outward spoke");
  const auto pos = std::find(c0.begin(), c0.end(), start) - c0.begin();
  const Vertex left = c0[(pos + 9) % 10];
  const Vertex right = c0[(pos + 1) % 10];
  const int step = right < left ? 1 : 9;

  std::vector<std::array<Vertex, 10>> cycles(chain.size());
  for (int j = 0; j < 10; ++j) cycles[0][j] = c0[(pos + step * j) % 10];

  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const std::set<Vertex> next(chain[i + 1].begin(), chain[i + 1].end());
    if (next.size() != 10) throw inconsistent("ring cycle is not a 10-cycle");
    const int parity = static_cast<int>(i % 2);
    for (int j = parity; j < 10; j += 2) {
      Vertex partner = -1;
      for (Vertex u : g.neighbors(cycles[i][j])) {
        if (next.count(u)) partner = u;
      }
      if (partner < 0) {
        throw inconsistent("spoke missing at v_" + std::to_string(i) + "^" +
                           std::to_string(j));
      }
      cycles[i + 1][j] = partner;
    }
    for (int j = 1 - parity; j < 10; j += 2) {
      const Vertex a = cycles[i + 1][(j + 9) % 10];
      const Vertex b = cycles[i + 1][(j + 1) % 10];
      Vertex middle = -1;
      for (Vertex u : g.neighbors(a)) {
        if (next.count(u) && g.has_edge(u, b)) middle = u;
      }
      if (middle < 0) throw inconsistent("ring cycle does not alternate spokes");
      cycles[i + 1][j] = middle;
    }
  }
  return cycles;
}

}  // namespace

NanotubeDecomposition assemble_decomposition(
    EmbeddedGraph g, std::vector<std::array<Vertex, 10>> cycles) {
  NanotubeDecomposition d;
  d.r = static_cast<int>(cycles.size()) - 1;
  if (d.r < 0) throw inconsistent("no cycles");
  if (g.order() != 10 * d.r + 20) {
    throw inconsistent("order " + std::to_string(g.order()) +
                       " does not match 10r + 20 for r = " + std::to_string(d.r));
  }
  d.graph = std::move(g);
  d.cycles = std::move(cycles);
  const EmbeddedGraph& graph = d.graph;

  std::set<Vertex> on_cycles;
  for (int i = 0; i <= d.r; ++i) {
    for (int j = 0; j < 10; ++j) {
      if (!graph.has_edge(d.at(i, j), d.at(i, j + 1))) {
        throw inconsistent("C_" + std::to_string(i) + " is not a cycle");
      }
      on_cycles.insert(d.at(i, j));
    }
  }
  if (static_cast<int>(on_cycles.size()) != 10 * (d.r + 1)) {
    throw inconsistent("boundary cycles overlap");
  }
  for (int i = 0; i < d.r; ++i) {
    for (int j = i % 2; j < 10; j += 2) {
      if (!graph.has_edge(d.at(i, j), d.at(i + 1, j))) {
        throw inconsistent("spoke v_" + std::to_string(i) + "^" +
                           std::to_string(j) + " missing");
      }
    }
  }
  for (int k = 0; k < 5; ++k) {
    d.center_a[k] = third_neighbor(graph, d.at(0, 2 * k + 1), on_cycles);
    d.center_b[k] = third_neighbor(graph, d.at(d.r, 2 * k + d.r % 2), on_cycles);
  }
  std::set<Vertex> all = on_cycles;
  all.insert(d.center_a.begin(), d.center_a.end());
  all.insert(d.center_b.begin(), d.center_b.end());
  if (static_cast<int>(all.size()) != graph.order()) {
    throw inconsistent("caps and cycles do not cover the graph exactly");
  }

  const FaceMap faces(graph);
  auto cap = [&](const std::array<Vertex, 5>& center) {
    const auto f = faces.find({center.begin(), center.end()});
    if (!f) throw inconsistent("cap centre is not a face");
    auto c = pentacap_at(graph, faces, *f);
    if (!c) throw inconsistent("cap centre is not surrounded by pentagons");
    return *c;
  };
  d.cap_a = cap(d.center_a);
  d.cap_b = cap(d.center_b);
  for (int k = 0; k < 5; ++k) {
    face_id(d, faces, {FaceLabel::Kind::kPetalA, 0, k});
    face_id(d, faces, {FaceLabel::Kind::kPetalB, 0, k});
    for (int i = 0; i < d.r; ++i) face_id(d, faces, {FaceLabel::Kind::kHexagon, i, k});
  }
  return d;
}

std::optional<NanotubeDecomposition> nanotube_decomposition(
    const EmbeddedGraph& g) {
  const FaceMap faces(g);
  std::optional<FaceRing> start;
  for (auto& ring : find_face_rings(g)) {
    const auto cut = is_cyclic_cutset(g, ring.links);
    if (cut && cut->classification == CutsetClass::kNontrivial) {
      start = std::move(ring);
      break;
    }
  }

  std::vector<RingType> log;
  std::vector<std::vector<Vertex>> chain;
  Pentacap cap_a;
  if (!start) {
    if (g.order() != 20) return std::nullopt;
    // The dodecahedron: every face is a pentacap centre. Use the face with
    // the smallest vertex set; the other cap shares its boundary.
    FaceId best = 0;
    std::vector<Vertex> best_key;
    for (FaceId f = 0; f < static_cast<FaceId>(faces.size()); ++f) {
      auto key = faces.face(f).boundary;
      std::sort(key.begin(), key.end());
      if (f == 0 || key < best_key) {
        best = f;
        best_key = std::move(key);
      }
    }
    auto cap = pentacap_at(g, faces, best);
    if (!cap) return std::nullopt;
    cap_a = std::move(*cap);
    chain.push_back(cap_a.boundary);
  } else {
    if (check_ring_dichotomy(g, *start) != RingArm::kAllHexTenTen) {
      throw inconsistent("nontrivial ring is not an all-hexagon 10/10 ring");
    }
    Descent inward = descend(g, faces, *start, start->inner_cycle, log);
    Descent outward = descend(g, faces, *start, start->outer_cycle, log);
    auto cap_in = pentacap_at(g, faces, inward.center);
    auto cap_out = pentacap_at(g, faces, outward.center);
    if (!cap_in || !cap_out) throw inconsistent("descent did not end in a pentacap");
    chain.assign(inward.cycles.rbegin(), inward.cycles.rend());
    chain.insert(chain.end(), outward.cycles.begin(), outward.cycles.end());
    if (cap_out->vertices.front() < cap_in->vertices.front()) {
      std::reverse(chain.begin(), chain.end());
      std::swap(cap_in, cap_out);
    }
    cap_a = std::move(*cap_in);
  }

  auto d = assemble_decomposition(g, coordinates(g, cap_a, chain));
  d.descent_log = std::move(log);
  return d;
}

}  // namespace fullerene
