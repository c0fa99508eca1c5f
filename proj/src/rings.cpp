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

#include "fullerene/rings.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "fullerene/connectivity.hpp"
#include "fullerene/error.hpp"

namespace fullerene {
namespace {

// Rotates a cycle to start at its smallest vertex, heading to the smaller of
// its two neighbours.
std::vector<Vertex> normalize_cycle(std::vector<Vertex> c) {
  const auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

// Splits a 2-regular edge set into its cycles.
std::vector<std::vector<Vertex>> cycles_of(const std::vector<Edge>& edges) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const auto& [v, nb] : adj) {
    if (nb.size() != 2) return {};
  }
  std::set<Vertex> seen;
  std::vector<std::vector<Vertex>> out;
  for (const auto& [start, nb] : adj) {
    if (seen.count(start)) continue;
    std::vector<Vertex> cycle{start};
    seen.insert(start);
    Vertex prev = start;
    Vertex cur = nb[0];
    while (cur != start) {
      cycle.push_back(cur);
      seen.insert(cur);
      const auto& next = adj[cur];
      const Vertex step = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = step;
    }
    out.push_back(normalize_cycle(std::move(cycle)));
  }
  return out;
}

std::vector<Edge> face_edges(const Face& f) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < f.length(); ++i) {
    out.emplace_back(f.boundary[i], f.boundary[(i + 1) % f.length()]);
  }
  return out;
}

bool same_vertex_set(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool is_face_cycle(const FaceMap& faces, const std::vector<Vertex>& cycle) {
  const auto f = faces.find(cycle);
  return f && faces.face(*f).length() == cycle.size();
}

}  // namespace

std::optional<FaceRing> make_face_ring(const EmbeddedGraph& g,
                                       const FaceMap& faces,
                                       std::vector<FaceId> ring_faces) {
  const std::size_t m = ring_faces.size();
  if (m < 3) return std::nullopt;
  if (std::set<FaceId>(ring_faces.begin(), ring_faces.end()).size() != m) {
    return std::nullopt;
  }
  const DualGraph& dual = faces.dual();
  FaceRing ring;
  ring.faces = std::move(ring_faces);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == m - 1);
      const int mult = dual.multiplicity(ring.faces[i], ring.faces[j]);
      if (consecutive ? mult != 1 : mult != 0) return std::nullopt;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    ring.links.push_back(
        dual.shared(ring.faces[i], ring.faces[(i + 1) % m]).front());
  }

  std::map<Edge, int> uses;
  for (FaceId f : ring.faces) {
    for (const Edge& e : face_edges(faces.face(f))) ++uses[e];
  }
  std::vector<Edge> boundary;
  for (const auto& [e, count] : uses) {
    if (count == 1) boundary.push_back(e);
  }
  auto cycles = cycles_of(boundary);
  if (cycles.size() != 2) return std::nullopt;

  // Far side of each boundary cycle: the side not containing the ring.
  std::array<std::vector<FaceId>, 2> far;
  for (int s = 0; s < 2; ++s) {
    far[s] = split_by_cycle(faces, g, cycles[s], ring.faces.front()).inside_faces;
  }
  const FaceId designated = faces.designated_outer();
  auto holds = [&](int s) {
    return std::find(far[s].begin(), far[s].end(), designated) != far[s].end();
  };
  int outer = 0;
  if (holds(0)) {
    outer = 0;
  } else if (holds(1)) {
    outer = 1;
  } else {
    auto key = [&](int s) {
      return std::make_tuple(far[s].size(), cycles[s].size(), cycles[s].front());
    };
    outer = key(0) < key(1) ? 1 : 0;
  }
  ring.outer_cycle = std::move(cycles[outer]);
  ring.inner_cycle = std::move(cycles[1 - outer]);
  return ring;
}

std::optional<FaceRing> ring_around_face(const EmbeddedGraph& g,
                                         const FaceMap& faces, FaceId center) {
  const Face& f = faces.face(center);
  std::vector<FaceId> around;
  for (const Edge& e : face_edges(f)) {
    const auto [a, b] = faces.faces_of(e);
    around.push_back(a == center ? b : a);
  }
  return make_face_ring(g, faces, std::move(around));
}

std::vector<FaceRing> find_face_rings(const EmbeddedGraph& g) {
  const FaceMap faces(g);
  std::vector<FaceRing> out;
  for (auto& cycle : chordless_dual_cycles(faces.dual(), 5)) {
    if (auto ring = make_face_ring(g, faces, std::move(cycle))) {
      out.push_back(std::move(*ring));
    }
  }
  return out;
}

RingType RingType::canonical() const {
  const std::size_t m = js.size();
  RingType best = *this;
  for (int reflect = 0; reflect < 2; ++reflect) {
    std::vector<int> base = js;
    if (reflect) std::reverse(base.begin(), base.end());
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<int> cand(m);
      for (std::size_t i = 0; i < m; ++i) cand[i] = base[(i + s) % m];
      if (cand < best.js) best.js = std::move(cand);
    }
  }
  return best;
}

std::string RingType::str() const {
  std::ostringstream out;
  out << '(';
  for (int j : js) out << j;
  out << ')';
  return out.str();
}

RingType ring_type(const EmbeddedGraph& g, const FaceRing& ring,
                   RingSide side) {
  const FaceMap faces(g);
  const auto& cycle = side == RingSide::kInner ? ring.inner_cycle : ring.outer_cycle;
  const std::set<Vertex> on_cycle(cycle.begin(), cycle.end());
  std::set<Edge> ring_edges;
  for (FaceId f : ring.faces) {
    for (const Edge& e : face_edges(faces.face(f))) ring_edges.insert(e);
  }
  RingType type;
  for (FaceId f : ring.faces) {
    int j = 0;
    for (Vertex v : faces.face(f).boundary) {
      if (!on_cycle.count(v)) continue;
      for (Vertex u : g.neighbors(v)) {
        if (!ring_edges.count(Edge(u, v))) {
          ++j;
          break;
        }
      }
    }
    type.js.push_back(j);
  }
  return type;
}

std::string_view ring_arm_name(RingArm arm) {
  switch (arm) {
    case RingArm::kInnerIsFace: return "InnerIsFace";
    case RingArm::kOuterIsFace: return "OuterIsFace";
    case RingArm::kAllHexTenTen: return "AllHexTenTen";
  }
  return "?";
}

RingArm check_ring_dichotomy(const EmbeddedGraph& g, const FaceRing& ring) {
  const FaceMap faces(g);
  if (is_face_cycle(faces, ring.inner_cycle)) return RingArm::kInnerIsFace;
  if (is_face_cycle(faces, ring.outer_cycle)) return RingArm::kOuterIsFace;
  const bool all_hex =
      std::all_of(ring.faces.begin(), ring.faces.end(),
                  [&](FaceId f) { return faces.face(f).length() == 6; });
  if (ring.faces.size() == 5 && all_hex && ring.inner_length() == 10 &&
      ring.outer_length() == 10) {
    return RingArm::kAllHexTenTen;
  }
  throw Error(ErrorCode::kDichotomyViolated,
              "ring with cycle lengths " + std::to_string(ring.inner_length()) +
                  "/" + std::to_string(ring.outer_length()) +
                  " has no face boundary and is not an all-hexagon 10/10 ring");
}

std::optional<Pentacap> pentacap_at(const EmbeddedGraph& g,
                                    const FaceMap& faces, FaceId center) {
  const Face& f = faces.face(center);
  if (f.length() != 5) return std::nullopt;
  const auto ring = ring_around_face(g, faces, center);
  if (!ring || ring->faces.size() != 5) return std::nullopt;
  for (FaceId p : ring->faces) {
    if (faces.face(p).length() != 5) return std::nullopt;
  }
  Pentacap cap;
  cap.center = center;
  std::copy(ring->faces.begin(), ring->faces.end(), cap.petals.begin());
  std::set<Vertex> covered(f.boundary.begin(), f.boundary.end());
  for (FaceId p : ring->faces) {
    const auto& b = faces.face(p).boundary;
    covered.insert(b.begin(), b.end());
  }
  cap.vertices.assign(covered.begin(), covered.end());
  cap.boundary = same_vertex_set(ring->inner_cycle, f.boundary)
                     ? ring->outer_cycle
                     : ring->inner_cycle;
  return cap;
}

std::vector<Pentacap> find_pentacaps(const EmbeddedGraph& g) {
  const FaceMap faces(g);
  std::vector<Pentacap> out;
  for (FaceId f = 0; f < static_cast<FaceId>(faces.size()); ++f) {
    if (auto cap = pentacap_at(g, faces, f)) out.push_back(std::move(*cap));
  }
  return out;
}

FaceLabel FaceLabel::parse(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorCode::kInconsistentStructure,
                 "bad face label '" + std::string(text) + "'");
  };
  auto number = [&](std::string_view digits) {
    int value = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() ||
        value < 0) {
      throw bad();
    }
    return value;
  };
  if (text.empty()) throw bad();
  FaceLabel label;
  const char head = text.front();
  const std::string_view rest = text.substr(1);
  if (head == 'A' || head == 'B') {
    if (rest.empty()) {
      label.kind = head == 'A' ? Kind::kCenterA : Kind::kCenterB;
    } else {
      label.kind = head == 'A' ? Kind::kPetalA : Kind::kPetalB;
      label.k = number(rest);
    }
  } else if (head == 'H') {
    const auto dot = rest.find('.');
    if (dot == std::string_view::npos) throw bad();
    label.kind = Kind::kHexagon;
    label.ring = number(rest.substr(0, dot));
    label.k = number(rest.substr(dot + 1));
  } else {
    throw bad();
  }
  if (label.k > 4) throw bad();
  return label;
}

std::string FaceLabel::str() const {
  switch (kind) {
    case Kind::kCenterA: return "A";
    case Kind::kPetalA: return "A" + std::to_string(k);
    case Kind::kHexagon:
      return "H" + std::to_string(ring) + "." + std::to_string(k);
    case Kind::kCenterB: return "B";
    case Kind::kPetalB: return "B" + std::to_string(k);
  }
  return "?";
}

std::vector<Vertex> face_vertices(const NanotubeDecomposition& d,
                                  FaceLabel label) {
  auto ca = [&](int k) { return d.center_a[((k % 5) + 5) % 5]; };
  auto cb = [&](int k) { return d.center_b[((k % 5) + 5) % 5]; };
  const int k = label.k;
  switch (label.kind) {
    case FaceLabel::Kind::kCenterA:
      return {d.center_a.begin(), d.center_a.end()};
    case FaceLabel::Kind::kPetalA:
      return {ca(k), ca(k + 1), d.at(0, 2 * k + 3), d.at(0, 2 * k + 2),
              d.at(0, 2 * k + 1)};
    case FaceLabel::Kind::kHexagon: {
      const int i = label.ring;
      const int j = 2 * k + i % 2;
      return {d.at(i, j),         d.at(i, j + 1),     d.at(i, j + 2),
              d.at(i + 1, j + 2), d.at(i + 1, j + 1), d.at(i + 1, j)};
    }
    case FaceLabel::Kind::kCenterB:
      return {d.center_b.begin(), d.center_b.end()};
    case FaceLabel::Kind::kPetalB: {
      const int j = 2 * k + d.r % 2;
      return {cb(k), cb(k + 1), d.at(d.r, j + 2), d.at(d.r, j + 1),
              d.at(d.r, j)};
    }
  }
  return {};
}

FaceId face_id(const NanotubeDecomposition& d, const FaceMap& faces,
               FaceLabel label) {
  const auto f = faces.find(face_vertices(d, label));
  if (!f) {
    throw Error(ErrorCode::kInconsistentStructure,
                "face " + label.str() + " does not exist");
  }
  return *f;
}

FaceLabel label_of(const NanotubeDecomposition& d, const FaceMap& faces,
                   FaceId face) {
  std::vector<FaceLabel> all;
  all.push_back({FaceLabel::Kind::kCenterA, 0, 0});
  all.push_back({FaceLabel::Kind::kCenterB, 0, 0});
  for (int k = 0; k < 5; ++k) {
    all.push_back({FaceLabel::Kind::kPetalA, 0, k});
    all.push_back({FaceLabel::Kind::kPetalB, 0, k});
    for (int i = 0; i < d.r; ++i) all.push_back({FaceLabel::Kind::kHexagon, i, k});
  }
  for (const auto& label : all) {
    if (faces.find(face_vertices(d, label)) == face) return label;
  }
  throw Error(ErrorCode::kInconsistentStructure,
              "face " + std::to_string(face) + " has no nanotube label");
}

}  // namespace fullerene
