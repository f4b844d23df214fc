#pragma once

// Command-line front end. Everything written to `out` is JSON.
//
// Exit codes: 0 success, 1 the yes/no property checked is false,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmgraph/cmgraph.hpp"

namespace cmgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

/// Raised for unreadable inputs and other user errors; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline std::vector<FieldSpec> fields_from(const std::vector<long long>& chars) {
  if (chars.empty()) return default_fields();
  std::vector<FieldSpec> out;
  for (long long c : chars) out.push_back(FieldSpec::characteristic(c));
  return out;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot open \"" + path + "\" for writing");
  file << text;
  file.flush();
  if (!file) throw InputError("write to \"" + path + "\" failed");
}

}  // namespace detail

struct Options {
  std::string input;
  std::vector<long long> chars;
  int r = 2;
  std::uint64_t budget = kDefaultShellingBudget;
  std::size_t limit = 0;
  unsigned jobs = 1;
  std::string output;
  bool pretty = false;
  std::string fixture;
  std::string check;
  int n = 0;
};

struct Outcome {
  nlohmann::json json;
  int code = kExitOk;
};

inline Outcome cmd_cm(const Options& o) {
  const Graph g = detail::load_graph(o.input);
  nlohmann::json reports = nlohmann::json::array();
  bool any = false;
  for (const CMReport& r : cm_characteristic_profile(g, detail::fields_from(o.chars))) {
    any = any || r.is_cm;
    reports.push_back(to_json(r));
  }
  return {reports, any ? kExitOk : kExitFalse};
}

inline Outcome cmd_unmixed(const Options& o) {
  const Graph g = detail::load_graph(o.input);
  const auto sizes = maximal_independent_set_sizes(g);
  const bool unmixed = sizes.size() <= 1;
  return {{{"unmixed", unmixed}, {"maximal_independent_set_sizes", sizes}}, unmixed ? kExitOk : kExitFalse};
}

inline Outcome cmd_perfect(const Options& o) {
  const Graph g = detail::load_graph(o.input);
  const PerfectnessReport p = perfectness(g);
  nlohmann::json obstruction = nullptr;
  if (!p.perfect) {
    obstruction = {{"type", p.obstruction_in_complement ? "odd_antihole" : "odd_hole"},
                   {"cycle", p.obstruction}};
  }
  return {{{"perfect", p.perfect}, {"obstruction", obstruction}}, p.perfect ? kExitOk : kExitFalse};
}

inline Outcome cmd_shellable(const Options& o) {
  const Graph g = detail::load_graph(o.input);
  const SimplicialComplex c = independence_complex(g);
  if (!c.is_pure()) throw InputError("independence complex is not pure; shellability is decided for pure complexes");
  const ShellingResult s = is_shellable(c, o.budget);
  return {to_json(s), s.status == ShellStatus::shellable ? kExitOk : kExitFalse};
}

inline Outcome cmd_homology(const Options& o) {
  const Graph g = detail::load_graph(o.input);
  const SimplicialComplex c = independence_complex(g);
  nlohmann::json betti = nlohmann::json::array();
  for (FieldSpec f : detail::fields_from(o.chars)) {
    betti.push_back({{"characteristic", f.value()}, {"betti", to_json(reduced_betti(c, f))}});
  }
  return {{{"dimension", c.dimension()},
           {"pure", c.is_pure()},
           {"f_vector", c.f_vector()},
           {"facets", to_json(c.facets())},
           {"reduced_betti", betti}},
          kExitOk};
}

inline Outcome cmd_matchings(const Options& o) {
  const Graph g = detail::load_graph(o.input);
  if (o.r < 1) throw InputError("--r must be >= 1");
  nlohmann::json list = nlohmann::json::array();
  for (const RMatching& m : perfect_r_matchings(g, o.r, o.limit)) list.push_back(to_json(m));
  return {{{"r", o.r}, {"count", list.size()}, {"matchings", list}}, kExitOk};
}

inline Outcome cmd_cover(const Options& o) {
  const Graph g = detail::load_graph(o.input);
  const auto cover = class_g_membership(g);
  nlohmann::json cover_json = nullptr;
  nlohmann::json basic_json = nullptr;
  if (cover) {
    cover_json = to_json(cover->cliques);
    basic_json = to_json(basic_clique_cover(g, *cover).cliques);
  }
  return {{{"alpha", independence_number(g)}, {"cover", cover_json}, {"basic_clique_cover", basic_json}}, kExitOk};
}

inline Outcome cmd_classg(const Options& o) {
  const Graph g = detail::load_graph(o.input);
  const auto cover = class_g_membership(g);
  nlohmann::json cover_json = nullptr;
  if (cover) cover_json = to_json(cover->cliques);
  return {{{"in_class_g", cover.has_value()}, {"alpha", independence_number(g)}, {"cover", cover_json}},
          cover ? kExitOk : kExitFalse};
}

inline Outcome cmd_fixtures(const Options& o) {
  std::string_view text;
  try {
    text = fixtures::text(o.fixture);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (o.output.empty()) return {{{"fixture", o.fixture}, {"text", std::string(text)}}, kExitOk};
  detail::write_text_file(o.output, std::string(text));
  return {{{"fixture", o.fixture}, {"path", o.output}}, kExitOk};
}

inline const std::vector<std::string>& harness_checks() {
  static const std::vector<std::string> checks{"count",     "main-theorem", "uniqueness", "class-g",
                                               "parts",     "bipartite",    "converse",   "implications"};
  return checks;
}

inline Outcome cmd_harness(const Options& o) {
  if (o.n < 0 || o.n > kEnumerationBound) {
    throw InputError("--n must lie in 0.." + std::to_string(kEnumerationBound));
  }
  if (o.r < 1) throw InputError("--r must be >= 1");
  const HarnessOptions opt{o.jobs};
  std::vector<TheoremVerdict> verdicts;
  nlohmann::json extra = nlohmann::json::object();

  if (o.check == "count") {
    GraphEnumerator e{EnsembleFilter{}};
    nlohmann::json counts = nlohmann::json::array();
    for (int n = 0; n <= o.n; ++n) counts.push_back(e.members(n).size());
    extra["counts"] = counts;
  } else if (o.check == "main-theorem" || o.check == "uniqueness") {
    const GraphEnsemble ensemble = enumerate_ensemble(o.n, main_theorem_filter(o.r));
    for (FieldSpec f : detail::fields_from(o.chars)) {
      verdicts.push_back(o.check == "main-theorem" ? verify_main_theorem(ensemble, o.r, f, opt)
                                                   : verify_uniqueness_corollary(ensemble, o.r, f, opt));
    }
  } else if (o.check == "class-g") {
    verdicts.push_back(verify_proposition_class_g(enumerate_ensemble(o.n, class_g_proposition_filter(o.r)), opt));
  } else if (o.check == "parts") {
    verdicts.push_back(verify_parts_equal_and_matched(enumerate_ensemble(o.n, parts_theorem_filter(o.r)), o.r, opt));
  } else if (o.check == "bipartite") {
    verdicts.push_back(verify_bipartite_equivalences(o.n, opt));
  } else if (o.check == "converse") {
    const GraphEnsemble ensemble = enumerate_ensemble(o.n, main_theorem_filter(o.r));
    nlohmann::json found = nlohmann::json::array();
    std::ostringstream lines;
    for (FieldSpec f : detail::fields_from(o.chars)) {
      for (const ReportLine& line : converse_counterexample_search(ensemble, o.r, f, opt)) {
        nlohmann::json j = to_json(line);
        j["characteristic"] = f.value();
        lines << j.dump() << '\n';
        found.push_back(j);
      }
    }
    if (!o.output.empty()) detail::write_text_file(o.output, lines.str());
    return {{{"check", o.check}, {"graphs_checked", ensemble.members.size()}, {"converse_failures", found}}, kExitOk};
  } else if (o.check == "implications") {
    const GraphEnsemble all = enumerate_ensemble(o.n, EnsembleFilter{});
    const auto fields = detail::fields_from(o.chars);
    verdicts.push_back(verify_cm_implies_unmixed(all, fields, opt));
    verdicts.push_back(verify_shellable_implies_cm(all, opt));
    for (FieldSpec f : fields) verdicts.push_back(verify_vertex_deletion(all, f, opt));
  } else {
    throw InputError("unknown harness check \"" + o.check + "\"");
  }

  nlohmann::json summary = nlohmann::json::array();
  bool holds = true;
  std::ostringstream lines;
  for (const auto& v : verdicts) {
    summary.push_back(summary_json(v));
    holds = holds && v.holds();
    for (const auto& line : v.lines) {
      nlohmann::json j = to_json(line);
      j["theorem"] = v.theorem_id;
      lines << j.dump() << '\n';
    }
  }
  if (!o.output.empty()) detail::write_text_file(o.output, lines.str());
  nlohmann::json result = {{"check", o.check}, {"verdicts", summary}};
  result.update(extra);
  return {result, holds ? kExitOk : kExitFalse};
}

/// Parses argv, runs the subcommand and prints its JSON result.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohen-Macaulay graph toolkit", "cmgraph"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--pretty", o.pretty, "Indent the JSON output");

  auto graph_input = [&](CLI::App* sub) { sub->add_option("graph", o.input, "Edge-list file ('-' for stdin)")->required(); };
  auto char_option = [&](CLI::App* sub) {
    sub->add_option("--char", o.chars, "Field characteristic, repeatable (default 0 2 3)");
  };
  auto pretty_flag = [&](CLI::App* sub) { sub->add_flag("--pretty", o.pretty, "Indent the JSON output"); };

  std::vector<std::pair<CLI::App*, Outcome (*)(const Options&)>> commands;
  auto add = [&](const char* name, const char* help, Outcome (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    pretty_flag(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };

  {
    auto* s = add("cm", "Cohen-Macaulay profile of the edge ring over each characteristic", cmd_cm);
    graph_input(s);
    char_option(s);
  }
  graph_input(add("unmixed", "Whether all maximal independent sets have one size", cmd_unmixed));
  graph_input(add("perfect", "Perfectness via odd holes and odd antiholes", cmd_perfect));
  {
    auto* s = add("shellable", "Shellability of the independence complex", cmd_shellable);
    graph_input(s);
    s->add_option("--budget", o.budget, "Maximum number of prefix extensions");
  }
  {
    auto* s = add("homology", "Reduced Betti numbers of the independence complex", cmd_homology);
    graph_input(s);
    char_option(s);
  }
  {
    auto* s = add("matchings", "Perfect r-matchings", cmd_matchings);
    graph_input(s);
    s->add_option("--r", o.r, "Clique size")->required();
    s->add_option("--limit", o.limit, "Stop after this many matchings (0: all)");
  }
  graph_input(add("cover", "Cover by alpha(G) cliques and its basic clique cover", cmd_cover));
  graph_input(add("classg", "Membership in the class of graphs covered by alpha(G) cliques", cmd_classg));
  {
    auto* s = add("harness", "Exhaustive verification over small graphs", cmd_harness);
    s->add_option("check", o.check, "count|main-theorem|uniqueness|class-g|parts|bipartite|converse|implications")
        ->required();
    s->add_option("--n", o.n, "Largest vertex count")->required();
    s->add_option("--r", o.r, "Clique size / number of parts");
    char_option(s);
    s->add_option("--jobs", o.jobs, "Worker threads");
    s->add_option("-o", o.output, "Line-delimited JSON report path");
  }
  {
    auto* s = add("fixtures", "Write a bundled graph", cmd_fixtures);
    s->add_option("name", o.fixture, "Fixture name (fig1)")->required();
    s->add_option("-o", o.output, "Output path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  for (auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      const Outcome result = fn(o);
      out << (o.pretty ? result.json.dump(2) : result.json.dump()) << '\n';
      return result.code;
    } catch (const InputError& e) {
      err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
      err << "error: " << e.what() << '\n';
    }
    return kExitError;
  }
  return kExitError;
}

}  // namespace cmgraph::cli
