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
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fullerene/error.hpp"
#include "fullerene/hamilton.hpp"

namespace fullerene {
namespace {

constexpr FaceId kSlot = -1;
constexpr std::size_t kLiftLimit = 64;

std::vector<FaceLabel> all_labels(int r) {
  std::vector<FaceLabel> out{{FaceLabel::Kind::kCenterA, 0, 0}};
  for (int k = 0; k < 5; ++k) out.push_back({FaceLabel::Kind::kPetalA, 0, k});
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < 5; ++k) out.push_back({FaceLabel::Kind::kHexagon, i, k});
  }
  for (int k = 0; k < 5; ++k) out.push_back({FaceLabel::Kind::kPetalB, 0, k});
  out.push_back({FaceLabel::Kind::kCenterB, 0, 0});
  return out;
}

// Which cap each face's pentagon belongs to: 0 for hexagons, 1 for cap A,
// 2 for cap B.
std::vector<int> cap_of_faces(const NanotubeDecomposition& d,
                              const FaceMap& faces) {
  std::vector<int> cap(faces.size(), 0);
  for (const auto& label : all_labels(d.r)) {
    const FaceId f = face_id(d, faces, label);
    cap[f] = label.on_cap_a() ? 1 : label.on_cap_b() ? 2 : 0;
  }
  return cap;
}

// Depth-first search for face paths whose union is a disc bounded by a
// Hamilton cycle. The plan is a sequence of fixed faces and slots; a slot is
// filled with zero or more zone faces. Options are tried in face-id order so
// solutions come out in lexicographic order.
class PathSearch {
 public:
  PathSearch(const NanotubeDecomposition& d, const FaceMap& faces,
             std::vector<char> zone, std::vector<FaceId> plan, std::size_t limit)
      : g_(d.graph),
        faces_(faces),
        dual_(faces.dual()),
        cap_(cap_of_faces(d, faces)),
        zone_(std::move(zone)),
        plan_(std::move(plan)),
        target_(cap_split_for(d.r)),
        limit_(limit),
        used_(faces.size(), 0),
        fixed_(faces.size(), 0) {
    for (FaceId f : plan_) {
      if (f != kSlot) fixed_[f] = 1;
    }
  }

  std::vector<std::vector<FaceId>> run() {
    if (limit_ > 0) step(0);
    return std::move(found_);
  }

 private:
  bool dead(FaceId h) const {
    if (used_[h]) return false;
    const FaceId last = path_.empty() ? kSlot : path_.back();
    for (FaceId x : dual_.adjacency[h]) {
      if (used_[x] && x != last) return true;
    }
    return false;
  }

  bool alive(FaceId h) const {
    return used_[h] || ((zone_[h] || fixed_[h]) && !dead(h));
  }

  // Every vertex of h still lies on a used or usable face.
  bool covered_later(FaceId h) const {
    for (Vertex v : faces_.face(h).boundary) {
      const auto at = faces_.faces_at(v);
      if (std::none_of(at.begin(), at.end(), [&](FaceId x) { return alive(x); })) {
        return false;
      }
    }
    return true;
  }

  bool push(FaceId f) {
    if (used_[f]) return false;
    const FaceId last = path_.empty() ? kSlot : path_.back();
    if (last != kSlot && dual_.multiplicity(last, f) != 1) return false;
    for (FaceId x : dual_.adjacency[f]) {
      if (used_[x] && x != last) return false;
    }
    const int len = static_cast<int>(faces_.face(f).length());
    const int gain = last == kSlot ? len : len - 2;
    const int a = pent_a_ + (cap_[f] == 1);
    const int b = pent_b_ + (cap_[f] == 2);
    if (covered_ + gain > g_.order() || a > target_.cap_a || b > target_.cap_b) {
      return false;
    }
    used_[f] = 1;
    path_.push_back(f);
    covered_ += gain;
    pent_a_ = a;
    pent_b_ = b;
    bool ok = true;
    if (last != kSlot) {
      for (FaceId h : dual_.adjacency[last]) {
        if (!used_[h] && !covered_later(h)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) pop();
    return ok;
  }

  void pop() {
    const FaceId f = path_.back();
    path_.pop_back();
    used_[f] = 0;
    const int len = static_cast<int>(faces_.face(f).length());
    covered_ -= path_.empty() ? len : len - 2;
    pent_a_ -= cap_[f] == 1;
    pent_b_ -= cap_[f] == 2;
  }

  void step(std::size_t pi) {
    if (found_.size() >= limit_) return;
    if (pi == plan_.size()) {
      if (covered_ == g_.order() && pent_a_ == target_.cap_a &&
          pent_b_ == target_.cap_b) {
        found_.push_back(path_);
      }
      return;
    }
    if (plan_[pi] != kSlot) {
      if (push(plan_[pi])) {
        step(pi + 1);
        pop();
      }
      return;
    }
    std::vector<FaceId> options;
    if (path_.empty()) {
      for (FaceId f = 0; f < static_cast<FaceId>(faces_.size()); ++f) {
        if (zone_[f]) options.push_back(f);
      }
    } else {
      for (FaceId f : dual_.adjacency[path_.back()]) {
        if (zone_[f] && !used_[f]) options.push_back(f);
      }
    }
    const bool last_item = pi + 1 == plan_.size();
    if (!last_item) options.push_back(plan_[pi + 1]);
    std::sort(options.begin(), options.end());
    options.erase(std::unique(options.begin(), options.end()), options.end());
    if (last_item) step(pi + 1);
    for (FaceId f : options) {
      if (found_.size() >= limit_) return;
      if (!last_item && f == plan_[pi + 1]) {
        step(pi + 1);
      } else if (push(f)) {
        step(pi);
        pop();
      }
    }
  }

  const EmbeddedGraph& g_;
  const FaceMap& faces_;
  const DualGraph& dual_;
  std::vector<int> cap_;
  std::vector<char> zone_;
  std::vector<FaceId> plan_;
  CapSplit target_;
  std::size_t limit_;

  std::vector<char> used_;
  std::vector<char> fixed_;
  std::vector<FaceId> path_;
  int covered_ = 0;
  int pent_a_ = 0;
  int pent_b_ = 0;
  std::vector<std::vector<FaceId>> found_;
};

std::vector<FacePath> to_face_paths(const FaceMap& faces,
                                    std::vector<std::vector<FaceId>> paths) {
  std::vector<FacePath> out;
  out.reserve(paths.size());
  for (auto& p : paths) out.push_back(make_face_path(faces, std::move(p)));
  return out;
}

// Moves the path by the tube symmetry v_i^j -> v_i^{s + sign*j}, s even.
FacePath transform_path(const NanotubeDecomposition& d, const FaceMap& faces,
                        const FacePath& path, int shift, bool reflect) {
  std::vector<Vertex> image(d.graph.order(), -1);
  auto sigma = [&](int j) { return reflect ? shift - j : shift + j; };
  for (int i = 0; i <= d.r; ++i) {
    for (int j = 0; j < 10; ++j) image[d.at(i, j)] = d.at(i, sigma(j));
  }
  const int q = d.r % 2;
  auto mod5 = [](int k) { return ((k % 5) + 5) % 5; };
  for (int k = 0; k < 5; ++k) {
    // a_k ~ v_0^{2k+1} and e_k ~ v_r^{2k+q}; follow where the spoke goes.
    image[d.center_a[k]] = d.center_a[mod5((sigma(2 * k + 1) - 1) / 2)];
    image[d.center_b[k]] = d.center_b[mod5((sigma(2 * k + q) - q) / 2)];
  }
  std::vector<FaceId> out;
  for (FaceId f : path.faces) {
    std::vector<Vertex> vs;
    for (Vertex v : faces.face(f).boundary) vs.push_back(image[v]);
    const auto g = faces.find(vs);
    if (!g) {
      throw Error(ErrorCode::kInconsistentStructure,
                  "tube symmetry does not map faces to faces");
    }
    out.push_back(*g);
  }
  return make_face_path(faces, std::move(out));
}

std::vector<FacePath> expand_impl(const FacePath& contracted_path,
                                  const NanotubeDecomposition& d,
                                  std::size_t limit) {
  const Contraction c = contract_ring_mapped(d);
  const FaceMap faces(d.graph);
  const FaceMap small(c.contracted.graph);

  // Faces of the contracted graph with an unchanged counterpart in d.
  std::vector<FaceId> lifted(small.size(), kSlot);
  std::vector<char> zone(faces.size(), 1);
  std::set<FaceId> cap_a_small;
  {
    const Pentacap& cap = c.contracted.cap_a;
    cap_a_small.insert(cap.center);
    cap_a_small.insert(cap.petals.begin(), cap.petals.end());
  }
  for (FaceId f = 0; f < static_cast<FaceId>(small.size()); ++f) {
    if (cap_a_small.count(f)) continue;
    std::vector<Vertex> vs;
    for (Vertex v : small.face(f).boundary) vs.push_back(c.original[v]);
    if (const auto g = faces.find(vs)) {
      lifted[f] = *g;
      zone[*g] = 0;
    }
  }

  std::vector<FaceId> plan{kSlot};
  for (FaceId f : contracted_path.faces) {
    if (f < 0 || static_cast<std::size_t>(f) >= small.size()) {
      throw Error(ErrorCode::kPatternMismatch, "face id out of range");
    }
    if (lifted[f] == kSlot) {
      if (plan.back() != kSlot) plan.push_back(kSlot);
    } else {
      plan.push_back(lifted[f]);
    }
  }
  if (plan.back() != kSlot) plan.push_back(kSlot);

  PathSearch search(d, faces, std::move(zone), std::move(plan), limit);
  return to_face_paths(faces, search.run());
}

// Templates found with find_face_paths on nanotube(r), first in order.
const std::vector<std::vector<std::string>>& template_table() {
  static const std::vector<std::vector<std::string>> table = {
      {"A4", "A0", "A1", "A2", "B3", "B"},
      {"A", "A4", "H0.4", "H0.3", "H0.2", "H0.1", "B0", "B"},
      {"A4", "A0", "A1", "A2", "H0.3", "H1.2", "H1.1", "H1.0", "H1.4", "B4", "B"},
  };
  return table;
}

// Distinct face paths (by face set) the construction can produce for d. The
// boundary determines the face set, so this loses no cycles.
std::vector<FacePath> variant_paths(const NanotubeDecomposition& d) {
  std::vector<FacePath> paths;
  std::set<std::vector<FaceId>> seen;
  auto keep = [&](FacePath p) {
    auto key = p.faces;
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) paths.push_back(std::move(p));
  };
  if (d.r <= 2) {
    const FaceMap faces(d.graph);
    const FacePath base = base_face_path(d);
    for (bool reflect : {false, true}) {
      for (int shift = 0; shift < 10; shift += 2) {
        keep(transform_path(d, faces, base, shift, reflect));
      }
    }
  }
  if (d.r == 0) return paths;
  for (const auto& lower : variant_paths(contract_ring(d))) {
    for (auto& p : expand_impl(lower, d, kLiftLimit)) keep(std::move(p));
  }
  return paths;
}

}  // namespace

CapSplit cap_split_for(int r) {
  return r % 2 == 0 ? CapSplit{4, 2} : CapSplit{2, 2};
}

std::vector<FacePath> find_face_paths(const NanotubeDecomposition& d,
                                      std::size_t limit) {
  const FaceMap faces(d.graph);
  PathSearch search(d, faces, std::vector<char>(faces.size(), 1), {kSlot},
                    limit);
  return to_face_paths(faces, search.run());
}

std::vector<FaceLabel> base_template(int r) {
  if (r < 0 || r > 2) {
    throw Error(ErrorCode::kPatternMismatch,
                "no stored template for r = " + std::to_string(r));
  }
  std::vector<FaceLabel> out;
  for (const auto& text : template_table()[r]) out.push_back(FaceLabel::parse(text));
  return out;
}

FacePath base_face_path(const NanotubeDecomposition& d) {
  const FaceMap faces(d.graph);
  std::vector<FaceId> path;
  for (const auto& label : base_template(d.r)) path.push_back(face_id(d, faces, label));
  return make_face_path(faces, std::move(path));
}

FacePath expand_face_path(const FacePath& contracted_path,
                          const NanotubeDecomposition& d) {
  auto all = expand_impl(contracted_path, d, 1);
  if (all.empty()) {
    throw Error(ErrorCode::kPatternMismatch,
                "no lift of the face path across ring 1 for r = " +
                    std::to_string(d.r));
  }
  return std::move(all.front());
}

std::vector<FacePath> expand_face_path_all(const FacePath& contracted_path,
                                           const NanotubeDecomposition& d,
                                           std::size_t limit) {
  return expand_impl(contracted_path, d, limit);
}

HamiltonWitness build_hamilton(const NanotubeDecomposition& d) {
  HamiltonWitness out;
  if (d.r <= 2) {
    out.path = base_face_path(d);
  } else {
    const HamiltonWitness inner = build_hamilton(contract_ring(d));
    out.path = expand_face_path(inner.path, d);
  }
  out.cycle = face_path_boundary(d.graph, out.path);
  out.split = cap_split_for(d.r);
  return out;
}

std::vector<HamiltonCycle> enumerate_hamilton_variants(
    const NanotubeDecomposition& d) {
  const auto paths = variant_paths(d);
  std::set<std::vector<Edge>> cycles;
  std::vector<HamiltonCycle> out;
  for (const auto& p : paths) {
    HamiltonCycle c = face_path_boundary(d.graph, p);
    if (cycles.insert(c.edges()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const HamiltonCycle& a, const HamiltonCycle& b) {
              return a.vertices < b.vertices;
            });
  return out;
}

}  // namespace fullerene
