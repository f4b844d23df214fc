#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "cmgraph/cm_criteria.hpp"
#include "cmgraph/cover_matching.hpp"
#include "cmgraph/enumerate.hpp"
#include "cmgraph/shelling.hpp"

namespace cmgraph {

/// One graph's line in a verification report.
struct ReportLine {
  std::string canon;
  nlohmann::json properties;
  std::vector<std::string> violations;
};

struct TheoremVerdict {
  std::string theorem_id;
  std::size_t graphs_checked = 0;
  std::vector<ReportLine> lines;  // one per checked graph, ensemble order

  std::vector<const ReportLine*> counterexamples() const {
    std::vector<const ReportLine*> out;
    for (const auto& l : lines) {
      if (!l.violations.empty()) out.push_back(&l);
    }
    return out;
  }
  bool holds() const { return counterexamples().empty(); }
};

inline nlohmann::json to_json(const ReportLine& line) {
  return {{"canon", line.canon}, {"properties", line.properties}, {"violations", line.violations}};
}

/// Line-delimited JSON, one graph per line.
inline void write_report(std::ostream& out, const TheoremVerdict& verdict) {
  for (const auto& line : verdict.lines) out << to_json(line).dump() << '\n';
}

inline nlohmann::json summary_json(const TheoremVerdict& v) {
  nlohmann::json counter = nlohmann::json::array();
  for (const auto* line : v.counterexamples()) counter.push_back(to_json(*line));
  return {{"theorem", v.theorem_id},
          {"graphs_checked", v.graphs_checked},
          {"counterexamples", counter}};
}

struct HarnessOptions {
  unsigned jobs = 1;
};

namespace detail {

// Applies `check` to every member on `jobs` workers; results keep input order.
inline std::vector<ReportLine> fan_out(const std::vector<EnsembleMember>& members, unsigned jobs,
                                       const std::function<ReportLine(const EnsembleMember&)>& check) {
  std::vector<ReportLine> out(members.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(members.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < members.size(); ++i) out[i] = check(members[i]);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < members.size(); i += workers) out[i] = check(members[i]);
      });
    }
  }
  return out;
}

inline TheoremVerdict run_check(std::string id, const GraphEnsemble& ensemble, const HarnessOptions& opt,
                                const std::function<ReportLine(const EnsembleMember&)>& check) {
  TheoremVerdict v;
  v.theorem_id = std::move(id);
  v.graphs_checked = ensemble.members.size();
  v.lines = fan_out(ensemble.members, opt.jobs, check);
  return v;
}

inline std::string field_tag(FieldSpec f) { return "char" + std::to_string(f.value()); }

}  // namespace detail

/// Ensemble for the main theorem: r-partite, class G, every maximal clique of size r.
inline EnsembleFilter main_theorem_filter(int r) {
  EnsembleFilter f;
  f.r_partite = r;
  f.maximal_clique_size = r;
  f.class_g = true;
  return f;
}

/// Cohen-Macaulay graphs in the ensemble have a vertex of degree r - 1.
inline TheoremVerdict verify_main_theorem(const GraphEnsemble& ensemble, int r, FieldSpec field,
                                          const HarnessOptions& opt = {}) {
  return detail::run_check("main_theorem/r" + std::to_string(r) + "/" + detail::field_tag(field), ensemble, opt,
                           [&](const EnsembleMember& m) {
                             ReportLine line{m.canon, {}, {}};
                             const bool cm = is_cm_graph(m.graph, field);
                             const auto low = degree_r_minus_1_vertices(m.graph, r);
                             line.properties = {{"cm", cm}, {"degree_r_minus_1", low}};
                             if (cm && low.empty()) line.violations.push_back("CM graph without a vertex of degree r-1");
                             return line;
                           });
}

/// Cohen-Macaulay graphs in the ensemble have exactly one perfect r-matching.
inline TheoremVerdict verify_uniqueness_corollary(const GraphEnsemble& ensemble, int r, FieldSpec field,
                                                  const HarnessOptions& opt = {}) {
  return detail::run_check("uniqueness_corollary/r" + std::to_string(r) + "/" + detail::field_tag(field), ensemble,
                           opt, [&](const EnsembleMember& m) {
                             ReportLine line{m.canon, {}, {}};
                             const bool cm = is_cm_graph(m.graph, field);
                             const auto matchings = perfect_r_matchings(m.graph, r, 2).size();
                             line.properties = {{"cm", cm}, {"perfect_r_matchings_capped_at_2", matchings}};
                             if (cm && matchings != 1) {
                               line.violations.push_back("CM graph with " + std::to_string(matchings) +
                                                         " perfect r-matchings (capped at 2)");
                             }
                             return line;
                           });
}

/// Ensemble for the class G proposition: r-partite, unmixed, perfect, maximal cliques of size r.
inline EnsembleFilter class_g_proposition_filter(int r) {
  EnsembleFilter f;
  f.r_partite = r;
  f.maximal_clique_size = r;
  f.unmixed = true;
  f.perfect = true;
  return f;
}

/// Every member is covered by alpha(G) cliques.
inline TheoremVerdict verify_proposition_class_g(const GraphEnsemble& ensemble, const HarnessOptions& opt = {}) {
  return detail::run_check("proposition_class_g", ensemble, opt, [](const EnsembleMember& m) {
    ReportLine line{m.canon, {}, {}};
    const int alpha = independence_number(m.graph);
    const auto cover = class_g_membership(m.graph);
    line.properties = {{"alpha", alpha}, {"in_class_g", cover.has_value()}};
    if (!cover) {
      line.violations.push_back("no cover by alpha(G) cliques");
    } else if (static_cast<int>(cover->cliques.size()) != alpha) {
      line.violations.push_back("cover size differs from alpha(G)");
    }
    return line;
  });
}

/// Ensemble for the parts theorem: r-partite, unmixed, maximal cliques of size r.
inline EnsembleFilter parts_theorem_filter(int r) {
  EnsembleFilter f;
  f.r_partite = r;
  f.maximal_clique_size = r;
  f.unmixed = true;
  return f;
}

/// Every r-partition has equal part sizes and a perfect matching between each two parts.
inline TheoremVerdict verify_parts_equal_and_matched(const GraphEnsemble& ensemble, int r,
                                                     const HarnessOptions& opt = {}) {
  return detail::run_check("parts_equal_and_matched/r" + std::to_string(r), ensemble, opt,
                           [&](const EnsembleMember& m) {
                             ReportLine line{m.canon, {}, {}};
                             const auto partitions = r_partitions(m.graph, r);
                             std::size_t bad = 0;
                             for (const auto& p : partitions) {
                               if (!pairwise_part_matchings(m.graph, p)) ++bad;
                             }
                             line.properties = {{"r_partitions", partitions.size()}};
                             if (bad > 0) {
                               line.violations.push_back(std::to_string(bad) +
                                                         " r-partition(s) with unequal or unmatched parts");
                             }
                             return line;
                           });
}

/**
 * Connected bipartite graphs on 2..n_max vertices: the Herzog-Hibi ordering
 * exists iff the graph is CM in characteristic 0 iff in characteristic 2;
 * and for unmixed ones, CM iff the perfect matching is unique.
 */
inline TheoremVerdict verify_bipartite_equivalences(int n_max, const HarnessOptions& opt = {}) {
  EnsembleFilter f;
  f.connected = true;
  f.r_partite = 2;
  const GraphEnsemble ensemble = enumerate_ensemble(n_max, f, 2);
  return detail::run_check("bipartite_equivalences", ensemble, opt, [](const EnsembleMember& m) {
    ReportLine line{m.canon, {}, {}};
    const bool hh = hh_bipartite_cm(m.graph).has_value();
    const bool cm0 = is_cm_graph(m.graph, FieldSpec::characteristic(0));
    const bool cm2 = is_cm_graph(m.graph, FieldSpec::characteristic(2));
    const bool unmixed = is_unmixed(m.graph);
    const bool unique = has_unique_perfect_r_matching(m.graph, 2);
    line.properties = {{"hh", hh}, {"cm_char0", cm0}, {"cm_char2", cm2}, {"unmixed", unmixed},
                       {"unique_perfect_matching", unique}};
    if (hh != cm0 || cm0 != cm2) line.violations.push_back("Herzog-Hibi and Reisner verdicts disagree");
    if (unmixed && cm0 != unique) line.violations.push_back("unmixed: CM differs from unique perfect matching");
    return line;
  });
}

/// Graphs with a degree r-1 vertex and a unique perfect r-matching that are not CM.
inline std::vector<ReportLine> converse_counterexample_search(const GraphEnsemble& ensemble, int r, FieldSpec field,
                                                              const HarnessOptions& opt = {}) {
  auto verdict = detail::run_check("converse", ensemble, opt, [&](const EnsembleMember& m) {
    ReportLine line{m.canon, {}, {}};
    const bool low = !degree_r_minus_1_vertices(m.graph, r).empty();
    const bool unique = has_unique_perfect_r_matching(m.graph, r);
    const bool cm = low && unique && is_cm_graph(m.graph, field);
    line.properties = {{"degree_r_minus_1", low}, {"unique_perfect_r_matching", unique}, {"cm", cm}};
    if (low && unique && !cm) line.violations.push_back("converse fails: not CM");
    return line;
  });
  std::vector<ReportLine> out;
  for (auto& line : verdict.lines) {
    if (!line.violations.empty()) out.push_back(std::move(line));
  }
  return out;
}

/// CM over any of `fields` implies unmixed.
inline TheoremVerdict verify_cm_implies_unmixed(const GraphEnsemble& ensemble, const std::vector<FieldSpec>& fields,
                                                const HarnessOptions& opt = {}) {
  return detail::run_check("cm_implies_unmixed", ensemble, opt, [&](const EnsembleMember& m) {
    ReportLine line{m.canon, {}, {}};
    const bool unmixed = is_unmixed(m.graph);
    const SimplicialComplex c = independence_complex(m.graph);
    line.properties["unmixed"] = unmixed;
    for (FieldSpec f : fields) {
      // Full Reisner scan, so the purity shortcut cannot mask the implication.
      const bool cm = reisner_cm(c, f).is_cm;
      line.properties["cm_" + detail::field_tag(f)] = cm;
      if (cm && !unmixed) line.violations.push_back("CM over " + detail::field_tag(f) + " but not unmixed");
    }
    return line;
  });
}

/// Pure shellable independence complexes are CM in characteristics 0 and 2.
inline TheoremVerdict verify_shellable_implies_cm(const GraphEnsemble& ensemble, const HarnessOptions& opt = {}) {
  return detail::run_check("shellable_implies_cm", ensemble, opt, [](const EnsembleMember& m) {
    ReportLine line{m.canon, {}, {}};
    const SimplicialComplex c = independence_complex(m.graph);
    const bool pure = c.is_pure();
    line.properties["pure"] = pure;
    if (!pure) return line;
    const ShellingResult shelling = is_shellable(c);
    line.properties["shelling"] = to_string(shelling.status);
    if (shelling.status == ShellStatus::budget_exhausted) {
      line.violations.push_back("shellability undecided within budget");
    }
    if (shelling.status != ShellStatus::shellable) return line;
    for (FieldSpec f : {FieldSpec::characteristic(0), FieldSpec::characteristic(2)}) {
      const bool cm = is_cohen_macaulay(c, f);
      line.properties["cm_" + detail::field_tag(f)] = cm;
      if (!cm) line.violations.push_back("pure shellable but not CM over " + detail::field_tag(f));
    }
    return line;
  });
}

/// For CM graphs, removing any closed neighbourhood leaves a CM graph.
inline TheoremVerdict verify_vertex_deletion(const GraphEnsemble& ensemble, FieldSpec field,
                                             const HarnessOptions& opt = {}) {
  return detail::run_check("vertex_deletion/" + detail::field_tag(field), ensemble, opt,
                           [&](const EnsembleMember& m) {
                             ReportLine line{m.canon, {}, {}};
                             const bool cm = is_cm_graph(m.graph, field);
                             line.properties["cm"] = cm;
                             if (!cm) return line;
                             for (Vertex v = 1; v <= m.graph.order(); ++v) {
                               const auto rest = delete_closed_neighborhood(m.graph, v);
                               if (!is_cm_graph(rest.graph, field)) {
                                 line.violations.push_back("deleting N[" + std::to_string(v) + "] breaks CM");
                               }
                             }
                             return line;
                           });
}

}  // namespace cmgraph
