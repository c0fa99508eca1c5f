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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fullerene/connectivity.hpp"
#include "fullerene/error.hpp"
#include "fullerene/hamilton.hpp"
#include "fullerene/io.hpp"
#include "fullerene/matchings.hpp"
#include "fullerene/report.hpp"
#include "fullerene/rings.hpp"
#include "json.hpp"

namespace fullerene::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::optional<int> nanotube_r;
  std::size_t index = 0;
  std::string out;
  std::string format = "text";
  std::optional<int> max_oracle_n;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EmbeddedGraph load(const Options& o) {
  if (o.nanotube_r) return nanotube(*o.nanotube_r);
  if (o.input.empty()) throw UsageError("need an input file or --nanotube");
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw UsageError("cannot read " + o.input);
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  auto graphs = read_graphs(bytes);
  if (o.index >= graphs.size()) {
    throw UsageError("input holds " + std::to_string(graphs.size()) +
                     " graphs, no index " + std::to_string(o.index));
  }
  return std::move(graphs[o.index]);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + o.out);
  file << text;
}

int validate_cmd(const Options& o, std::ostream& out) {
  const auto g = load(o);
  AnalysisOptions a;
  a.cutsets = a.rings = false;
  auto res = analyze(g, a);
  res.decomposition.reset();
  json report = json::parse(write_report(res));
  report.erase("decomposition");
  emit(o, report.dump(2) + "\n", out);
  return res.validation.is_fullerene() ? kExitOk : kExitFailure;
}

int analyze_cmd(const Options& o, std::ostream& out) {
  AnalysisOptions a;
  if (o.max_oracle_n) a.max_oracle_order = *o.max_oracle_n;
  const auto res = analyze(load(o), a);
  emit(o, write_report(res), out);
  return res.validation.is_fullerene() ? kExitOk : kExitFailure;
}

int hamilton_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load(o);
  const auto d = nanotube_decomposition(g);
  if (!d) {
    err << "no nanotube decomposition; the construction does not apply\n";
    return kExitFailure;
  }
  const auto w = build_hamilton(*d);
  const FaceMap faces(g);
  std::vector<std::string> labels;
  for (FaceId f : w.path.faces) labels.push_back(label_of(*d, faces, f).str());
  const auto variants = enumerate_hamilton_variants(*d);
  const BigCount bound = hamilton_lower_bound(d->r);
  const bool verified = verify_hamilton(g, w.cycle);
  json report = {{"r", d->r},
                 {"face_path", labels},
                 {"pentagon_count", w.path.pentagon_count},
                 {"cycle", w.cycle.vertices},
                 {"cycle_length", w.cycle.vertices.size()},
                 {"verified", verified},
                 {"variants", variants.size()},
                 {"variant_bound", bound.convert_to<std::uint64_t>()}};
  const int limit = o.max_oracle_n.value_or(40);
  if (g.order() <= limit) {
    report["exact_hamilton"] = brute_force_hamilton(g, limit).count;
  }
  emit(o, report.dump(2) + "\n", out);
  return verified && BigCount(variants.size()) >= bound ? kExitOk : kExitFailure;
}

int matchings_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load(o);
  const int limit = o.max_oracle_n.value_or(60);
  if (!validate_fullerene(g).is_fullerene()) {
    err << "input is not a fullerene\n";
    return kExitFailure;
  }
  json report = {{"n", g.order()}};
  bool ok = true;
  std::optional<BigCount> exact;
  if (g.order() <= limit) {
    exact = count_perfect_matchings(g, limit);
    report["exact_matchings"] = exact->str();
    const BigCount prior = prior_matching_bound(g.order());
    report["prior_bound"] = prior.str();
    ok = ok && *exact >= prior;
  } else {
    report["exact_matchings"] = nullptr;
  }
  if (const auto d = nanotube_decomposition(g)) {
    const BigCount bound = matching_lower_bound(g.order());
    report["r"] = d->r;
    report["bound"] = bound.str();
    if (exact) ok = ok && *exact >= bound;
  }
  emit(o, report.dump(2) + "\n", out);
  return ok ? kExitOk : kExitFailure;
}

int generate_cmd(const Options& o, std::ostream& out) {
  if (!o.nanotube_r) throw UsageError("generate needs --nanotube");
  const auto g = nanotube(*o.nanotube_r);
  if (o.format == "pcode") {
    emit(o, write_planar_code(std::span(&g, 1)), out);
  } else {
    emit(o, write_text_rotation(g), out);
  }
  return kExitOk;
}

int oracle_cmd(const Options& o, std::ostream& out) {
  const auto g = load(o);
  const int ham_limit = o.max_oracle_n.value_or(40);
  const int match_limit = o.max_oracle_n.value_or(60);
  json checks = json::array();
  bool all = true;
  auto check = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    all = all && pass;
  };

  const auto report = validate_fullerene(g);
  check("fullerene", report.is_fullerene(), "");
  if (!report.is_fullerene()) {
    emit(o, json{{"checks", checks}, {"pass", false}}.dump(2) + "\n", out);
    return kExitFailure;
  }
  const int n = g.order();

  const auto structural = find_cyclic_5_cutsets(g);
  if (n <= ham_limit) {
    const int k = cyclic_edge_connectivity(g);
    check("cyclic_edge_connectivity", k == 5, std::to_string(k));
    auto exhaustive = cyclic_cutsets_exhaustive(g, 5, ham_limit);
    std::set<std::vector<Edge>> a, b;
    for (const auto& c : structural) a.insert(c.edges);
    for (const auto& c : exhaustive) b.insert(c.edges);
    check("cyclic_5_cutsets", a == b,
          std::to_string(a.size()) + " structural, " + std::to_string(b.size()) +
              " exhaustive");
  }

  const bool nontrivial = std::any_of(structural.begin(), structural.end(), [](const auto& c) {
    return c.classification == CutsetClass::kNontrivial;
  });
  const auto d = nanotube_decomposition(g);
  check("nontrivial_cutset_iff_tube", nontrivial == (d && d->r >= 1),
        std::string(nontrivial ? "cutset" : "no cutset") + ", " +
            (d ? "r = " + std::to_string(d->r) : "no decomposition"));

  int dichotomy_failures = 0;
  for (const auto& ring : find_face_rings(g)) {
    try {
      check_ring_dichotomy(g, ring);
    } catch (const Error&) {
      ++dichotomy_failures;
    }
  }
  check("ring_dichotomy", dichotomy_failures == 0, std::to_string(dichotomy_failures));

  for (const auto& cap : find_pentacaps(g)) {
    const int inside = six_pentagons_inside(g, cap.boundary);
    if (inside != 6) {
      check("pentacap_six_pentagons", false,
            "cap at face " + std::to_string(cap.center) + ": " + std::to_string(inside));
    }
  }

  if (n <= match_limit) {
    const BigCount a = count_perfect_matchings(g, match_limit);
    const BigCount b = count_perfect_matchings_by_vertex(g, match_limit);
    check("matching_counters_agree", a == b, a.str() + " / " + b.str());
    check("prior_matching_bound", a >= prior_matching_bound(n), a.str());
    if (d) check("matching_bound", a >= matching_lower_bound(n), a.str());
  }

  if (d) {
    const auto w = build_hamilton(*d);
    const int want = d->r % 2 == 0 ? 6 : 4;
    check("hamilton_construction",
          verify_hamilton(g, w.cycle) && w.path.pentagon_count == want,
          std::to_string(w.path.pentagon_count) + " pentagons");
    const auto variants = enumerate_hamilton_variants(*d);
    check("hamilton_variant_bound",
          BigCount(variants.size()) >= hamilton_lower_bound(d->r),
          std::to_string(variants.size()));
    if (n <= ham_limit) {
      const auto cycles = all_hamilton_cycles(g, ham_limit);
      const auto chords = count_hamilton_by_chords(g, ham_limit);
      check("hamilton_counters_agree", cycles.size() == chords,
            std::to_string(cycles.size()) + " / " + std::to_string(chords));
      const std::set<std::vector<Edge>> known(cycles.begin(), cycles.end());
      const bool contained = std::all_of(variants.begin(), variants.end(), [&](const auto& c) {
        return known.count(c.edges()) > 0;
      });
      check("variants_in_oracle", contained, "");
    }
  }
  emit(o, json{{"checks", checks}, {"pass", all}}.dump(2) + "\n", out);
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cyclic 5-cutsets, nanotube structure and Hamilton cycles of fullerenes",
               "fullerene"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "graph file (text rotation or planar_code)");
    sub->add_option("--nanotube", o.nanotube_r, "use the generated nanotube with r rings")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--index", o.index, "record to use from a multi-graph file");
    sub->add_option("--out", o.out, "write the report here instead of stdout");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-oracle-n", o.max_oracle_n,
                    "largest order for exhaustive searches")
        ->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "check the fullerene axioms");
  add_input(validate);
  auto* analyze = app.add_subcommand("analyze", "cutsets, rings and decomposition");
  add_input(analyze);
  add_budget(analyze);
  auto* hamilton = app.add_subcommand("hamilton", "constructed Hamilton cycle and variants");
  add_input(hamilton);
  add_budget(hamilton);
  auto* matchings = app.add_subcommand("matchings", "perfect matching count and bounds");
  add_input(matchings);
  add_budget(matchings);
  auto* generate = app.add_subcommand("generate", "write a nanotube graph");
  generate->add_option("--nanotube", o.nanotube_r, "number of hexagonal rings")
      ->required()
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--format", o.format, "text or pcode")
      ->check(CLI::IsMember({"text", "pcode"}));
  generate->add_option("--out", o.out, "output file");
  auto* oracle = app.add_subcommand("oracle", "cross-check against exhaustive searches");
  add_input(oracle);
  add_budget(oracle);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*validate) return validate_cmd(o, out);
    if (*analyze) return analyze_cmd(o, out);
    if (*hamilton) return hamilton_cmd(o, out, err);
    if (*matchings) return matchings_cmd(o, out, err);
    if (*generate) return generate_cmd(o, out);
    if (*oracle) return oracle_cmd(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace fullerene::cli
