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

#include <cstdlib>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "fullerene/io.hpp"
#include "fullerene/report.hpp"
#include "json.hpp"
#include "support/leapfrog.hpp"
#include "support/small_graphs.hpp"

namespace fullerene {
namespace {

AnalysisOptions full() {
  AnalysisOptions o;
  o.hamilton = true;
  o.bounds = true;
  return o;
}

std::string golden_path(int r) {
  return std::string(FULLERENE_TEST_DIR) + "/golden/nanotube_" + std::to_string(r) +
         ".json";
}

class GoldenReport : public ::testing::TestWithParam<int> {};

// Set FULLERENE_UPDATE_GOLDEN=1 to rewrite the files after reviewing a diff.
TEST_P(GoldenReport, MatchesFrozenFile) {
  const int r = GetParam();
  const std::string report = write_report(analyze(nanotube(r), full()));
  if (std::getenv("FULLERENE_UPDATE_GOLDEN")) {
    std::ofstream(golden_path(r), std::ios::binary) << report;
  }
  EXPECT_EQ(report, testing::read_file(golden_path(r)));
}

INSTANTIATE_TEST_SUITE_P(Tubes, GoldenReport, ::testing::Values(0, 1, 2));

TEST(WriteReport, Deterministic) {
  const auto g = nanotube(3);
  EXPECT_EQ(write_report(analyze(g, full())), write_report(analyze(g, full())));
}

TEST(WriteReport, SortedKeys) {
  const auto j = nlohmann::json::parse(write_report(analyze(nanotube(1), full())));
  std::string previous;
  for (const auto& [key, value] : j.items()) {
    EXPECT_LT(previous, key);
    previous = key;
  }
  EXPECT_EQ(j["decomposition"]["r"], 1);
  EXPECT_EQ(j["hamilton"]["pentagon_count"], 4);
  EXPECT_EQ(j["bounds"]["exact_matchings"], 151);
  EXPECT_EQ(j["cutsets"]["cyclic_edge_connectivity"], 5);
}

TEST(WriteReport, NonFullereneStopsAfterValidation) {
  const auto j = nlohmann::json::parse(write_report(analyze(testing::cube(), full())));
  EXPECT_FALSE(j["validation"]["fullerene"].get<bool>());
  EXPECT_FALSE(j.contains("decomposition"));
  EXPECT_FALSE(j.contains("hamilton"));
}

TEST(WriteReport, FullereneWithoutTube) {
  const auto j = nlohmann::json::parse(
      write_report(analyze(testing::leapfrog(nanotube(0)), full())));
  EXPECT_TRUE(j["validation"]["fullerene"].get<bool>());
  EXPECT_TRUE(j["decomposition"].is_null());
  EXPECT_EQ(j["pentacaps"], 0);
  EXPECT_TRUE(j["cutsets"]["cyclic_5_nontrivial"].empty());
  EXPECT_TRUE(j["cutsets"]["cyclic_edge_connectivity"].is_null());
}

}  // namespace
}  // namespace fullerene
