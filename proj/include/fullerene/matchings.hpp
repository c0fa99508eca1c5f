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

#ifndef FULLERENE_MATCHINGS_HPP_
#define FULLERENE_MATCHINGS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fullerene/graph.hpp"
#include "fullerene/hamilton.hpp"

namespace fullerene {

using BigCount = boost::multiprecision::cpp_int;

struct Matching {
  std::vector<Edge> edges;  // sorted

  bool operator==(const Matching&) const = default;
  auto operator<=>(const Matching&) const = default;
};

bool is_perfect_matching(const EmbeddedGraph& g, const Matching& m);

// The two alternating matchings of the cycle and its chord set. Throws
// kOddCycle for odd order and kBadCycle if `cycle` is not a Hamilton cycle
// of g.
std::array<Matching, 3> matchings_from_hamilton(const EmbeddedGraph& g,
                                                const HamiltonCycle& cycle);

// Exact count by including or excluding an edge at a vertex of least
// remaining degree. Throws kBudgetExceeded above max_order vertices.
BigCount count_perfect_matchings(const EmbeddedGraph& g, int max_order = 60);

// Exact count by matching the lowest free vertex in every possible way,
// memoised on the set of free vertices.
BigCount count_perfect_matchings_by_vertex(const EmbeddedGraph& g,
                                           int max_order = 60);

// 15 * 2^floor(n/20).
BigCount matching_lower_bound(int n);

// ceil(3(n+2)/4), the bound for an arbitrary fullerene of order n.
BigCount prior_matching_bound(int n);

// 5 * 2^(r/2 + 1) for even r, 5 * 2^((r + 1)/2) for odd r.
BigCount hamilton_lower_bound(int r);

struct BoundReport {
  int n = 0;
  int r = 0;
  BigCount hamilton_bound;
  BigCount matching_bound;
  BigCount prior_bound;
  std::optional<BigCount> exact_matchings;
  std::optional<BigCount> exact_hamilton;
  std::size_t constructed_cycles = 0;
  // Distinct matchings among the three per constructed cycle.
  std::size_t constructed_matchings = 0;
};

// Exact values are filled in only when n is within the given limits.
BoundReport bound_report(const NanotubeDecomposition& d, int max_hamilton_order = 40,
                         int max_matching_order = 60);

}  // namespace fullerene

#endif  // FULLERENE_MATCHINGS_HPP_
