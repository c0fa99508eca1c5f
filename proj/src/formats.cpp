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

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "fullerene/error.hpp"
#include "fullerene/io.hpp"

namespace fullerene {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, int& out) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string write_text_rotation(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (Vertex v = 0; v < g.order(); ++v) {
    out << v << ':';
    for (Vertex u : g.neighbors(v)) out << ' ' << u;
    out << '\n';
  }
  return out.str();
}

EmbeddedGraph read_text_rotation(std::string_view text) {
  int n = -1;
  std::vector<std::vector<Vertex>> rotation;
  std::vector<char> seen;
  int listed = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (n < 0) {
      if (!parse_int(line, n) || n <= 0) {
        throw ParseError(line_no, "expected a positive vertex count");
      }
      rotation.resize(n);
      seen.assign(n, 0);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, "expected 'v: a b c'");
    }
    int v = 0;
    if (!parse_int(trim(line.substr(0, colon)), v) || v < 0 || v >= n) {
      throw ParseError(line_no, "bad vertex id");
    }
    if (seen[v]) throw ParseError(line_no, "vertex listed twice");
    seen[v] = 1;
    ++listed;
    for (std::string_view token : split_ws(line.substr(colon + 1))) {
      int u = 0;
      if (!parse_int(token, u) || u < 0 || u >= n) {
        throw ParseError(line_no, "bad neighbour '" + std::string(token) + "'");
      }
      rotation[v].push_back(u);
    }
    if (rotation[v].size() != 3) {
      throw Error(ErrorCode::kRotationInconsistent,
                  "line " + std::to_string(line_no) + ": vertex " +
                      std::to_string(v) + " has " +
                      std::to_string(rotation[v].size()) + " neighbours");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing vertex count");
  if (listed != n) {
    throw ParseError(line_no, "expected " + std::to_string(n) +
                                  " vertex lines, found " +
                                  std::to_string(listed));
  }
  return EmbeddedGraph(std::move(rotation));
}

std::string write_planar_code(std::span<const EmbeddedGraph> graphs) {
  std::string out(kPlanarCodeHeader);
  for (const auto& g : graphs) {
    if (g.order() < 1 || g.order() > 255) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "planar_code records hold 1..255 vertices");
    }
    out.push_back(static_cast<char>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex u : g.neighbors(v)) out.push_back(static_cast<char>(u + 1));
      out.push_back('\0');
    }
  }
  return out;
}

std::vector<EmbeddedGraph> read_planar_code(std::string_view bytes) {
  if (!bytes.starts_with(kPlanarCodeHeader)) {
    throw Error(ErrorCode::kBadHeader, "missing >>planar_code<< header");
  }
  std::vector<EmbeddedGraph> graphs;
  std::size_t pos = kPlanarCodeHeader.size();
  auto byte_at = [&](std::size_t i) {
    return static_cast<unsigned char>(bytes[i]);
  };
  while (pos < bytes.size()) {
    const std::size_t record_start = pos;
    const int n = byte_at(pos++);
    if (n == 0) {
      throw ParseError(record_start,
                       "two-byte planar_code records (n > 255) are not "
                       "supported");
    }
    std::vector<std::vector<Vertex>> rotation(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        if (pos >= bytes.size()) {
          throw Error(ErrorCode::kTruncatedRecord,
                      "record at byte " + std::to_string(record_start) +
                          " ends inside vertex " + std::to_string(v + 1));
        }
        const int u = byte_at(pos++);
        if (u == 0) break;
        if (u > n) {
          throw ParseError(pos - 1, "neighbour " + std::to_string(u) +
                                        " exceeds order " + std::to_string(n));
        }
        rotation[v].push_back(u - 1);
      }
    }
    graphs.emplace_back(std::move(rotation));
  }
  return graphs;
}

std::vector<EmbeddedGraph> read_graphs(std::string_view bytes) {
  if (bytes.starts_with(kPlanarCodeHeader)) return read_planar_code(bytes);
  return {read_text_rotation(bytes)};
}

}  // namespace fullerene
