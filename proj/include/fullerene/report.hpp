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

#ifndef FULLERENE_REPORT_HPP_
#define FULLERENE_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fullerene/connectivity.hpp"
#include "fullerene/graph.hpp"
#include "fullerene/hamilton.hpp"
#include "fullerene/matchings.hpp"
#include "fullerene/rings.hpp"

namespace fullerene {

struct AnalysisOptions {
  bool cutsets = true;
  bool rings = true;
  bool hamilton = false;
  bool bounds = false;
  // Exhaustive searches (cyclic connectivity, Hamilton count) run up to this
  // order; matching counts up to max_matching_order.
  int max_oracle_order = 40;
  int max_matching_order = 60;
};

struct RingSummary {
  std::vector<FaceId> faces;
  RingArm arm = RingArm::kAllHexTenTen;
  std::string inner_type;  // canonical
  std::string outer_type;
  int inner_length = 0;
  int outer_length = 0;
};

struct AnalysisResults {
  FullereneReport validation;
  std::optional<int> cyclic_connectivity;
  std::vector<EdgeCutset> cyclic_5_cutsets;
  std::vector<RingSummary> rings;
  std::size_t pentacaps = 0;
  std::optional<NanotubeDecomposition> decomposition;
  std::vector<std::string> face_path;  // nanotube labels
  std::optional<HamiltonWitness> hamilton;
  std::optional<BoundReport> bounds;
};

// Runs the requested stages. Stages past validation are skipped for graphs
// that are not fullerenes; the nanotube stages need a decomposition.
AnalysisResults analyze(const EmbeddedGraph& g, const AnalysisOptions& options);

// JSON with sorted keys and a trailing newline; byte-identical for equal
// inputs.
std::string write_report(const AnalysisResults& results);

}  // namespace fullerene

#endif  // FULLERENE_REPORT_HPP_
