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
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "fullerene/report.hpp"
#include "json.hpp"

namespace fullerene {
namespace {

using nlohmann::json;

json count_json(const BigCount& c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) {
    return c.convert_to<std::uint64_t>();
  }
  return c.str();
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) {
    out.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  return out;
}

json validation_json(const FullereneReport& r) {
  json out = {
      {"order", r.order},
      {"edges", r.edge_count},
      {"faces", r.face_count},
      {"cubic", r.is_cubic},
      {"connected", r.is_connected},
      {"planar_embedding", r.is_planar_embedding},
      {"three_connected", r.is_3_connected},
      {"pentagons", r.pentagon_count},
      {"hexagons", r.hexagon_count},
      {"other_faces", r.other_face_count},
      {"fullerene", r.is_fullerene()},
  };
  out["girth"] = r.girth ? json(*r.girth) : json(nullptr);
  return out;
}

json cutsets_json(const AnalysisResults& res) {
  json nontrivial = json::array();
  int trivial = 0;
  for (const auto& c : res.cyclic_5_cutsets) {
    if (c.classification == CutsetClass::kTrivial) {
      ++trivial;
    } else {
      nontrivial.push_back({{"edges", edges_json(c.edges)},
                            {"sides", {c.side_a.size(), c.side_b.size()}}});
    }
  }
  json out = {{"cyclic_5_total", res.cyclic_5_cutsets.size()},
              {"cyclic_5_trivial", trivial},
              {"cyclic_5_nontrivial", nontrivial}};
  out["cyclic_edge_connectivity"] =
      res.cyclic_connectivity ? json(*res.cyclic_connectivity) : json(nullptr);
  return out;
}

json rings_json(const AnalysisResults& res) {
  std::map<std::string, int> arms;
  std::map<std::string, int> types;
  for (const auto& ring : res.rings) {
    ++arms[std::string(ring_arm_name(ring.arm))];
    ++types[ring.inner_type + ring.outer_type + " " +
            std::to_string(ring.inner_length) + "/" +
            std::to_string(ring.outer_length)];
  }
  return {{"count", res.rings.size()}, {"arms", arms}, {"types", types}};
}

json decomposition_json(const NanotubeDecomposition& d) {
  json descent = json::array();
  for (const auto& t : d.descent_log) descent.push_back(t.str());
  json cycles = json::array();
  for (const auto& c : d.cycles) cycles.push_back(c);
  return {{"r", d.r},
          {"cycles", cycles},
          {"center_a", d.center_a},
          {"center_b", d.center_b},
          {"descent", descent}};
}

json bounds_json(const BoundReport& b) {
  json out = {{"n", b.n},
              {"r", b.r},
              {"hamilton_bound", count_json(b.hamilton_bound)},
              {"matching_bound", count_json(b.matching_bound)},
              {"prior_matching_bound", count_json(b.prior_bound)},
              {"constructed_cycles", b.constructed_cycles},
              {"constructed_matchings", b.constructed_matchings}};
  out["exact_matchings"] =
      b.exact_matchings ? count_json(*b.exact_matchings) : json(nullptr);
  out["exact_hamilton"] =
      b.exact_hamilton ? count_json(*b.exact_hamilton) : json(nullptr);
  return out;
}

}  // namespace

AnalysisResults analyze(const EmbeddedGraph& g, const AnalysisOptions& options) {
  AnalysisResults res;
  res.validation = validate_fullerene(g);
  if (!res.validation.is_fullerene()) return res;

  if (options.cutsets) {
    res.cyclic_5_cutsets = find_cyclic_5_cutsets(g);
    if (g.order() <= options.max_oracle_order) {
      res.cyclic_connectivity = cyclic_edge_connectivity(g);
    }
  }
  if (options.rings) {
    for (const auto& ring : find_face_rings(g)) {
      res.rings.push_back({ring.faces, check_ring_dichotomy(g, ring),
                           ring_type(g, ring, RingSide::kInner).canonical().str(),
                           ring_type(g, ring, RingSide::kOuter).canonical().str(),
                           static_cast<int>(ring.inner_length()),
                           static_cast<int>(ring.outer_length())});
    }
    res.pentacaps = find_pentacaps(g).size();
  }
  res.decomposition = nanotube_decomposition(g);
  if (!res.decomposition) return res;

  if (options.hamilton) {
    res.hamilton = build_hamilton(*res.decomposition);
    const FaceMap faces(g);
    for (FaceId f : res.hamilton->path.faces) {
      res.face_path.push_back(label_of(*res.decomposition, faces, f).str());
    }
  }
  if (options.bounds) {
    res.bounds = bound_report(*res.decomposition, options.max_oracle_order,
                              options.max_matching_order);
  }
  return res;
}

std::string write_report(const AnalysisResults& res) {
  json out;
  out["validation"] = validation_json(res.validation);
  if (!res.cyclic_5_cutsets.empty() || res.cyclic_connectivity) {
    out["cutsets"] = cutsets_json(res);
  }
  if (!res.rings.empty()) {
    out["rings"] = rings_json(res);
    out["pentacaps"] = res.pentacaps;
  }
  if (res.validation.is_fullerene()) {
    out["decomposition"] = res.decomposition ? decomposition_json(*res.decomposition)
                                             : json(nullptr);
  }
  if (res.hamilton) {
    out["hamilton"] = {{"face_path", res.face_path},
                       {"pentagon_count", res.hamilton->path.pentagon_count},
                       {"cap_split", {res.hamilton->split.cap_a, res.hamilton->split.cap_b}},
                       {"cycle", res.hamilton->cycle.vertices},
                       {"verified", verify_hamilton(res.decomposition->graph,
                                                    res.hamilton->cycle)}};
  }
  if (res.bounds) out["bounds"] = bounds_json(*res.bounds);
  return out.dump(2) + "\n";
}

}  // namespace fullerene
