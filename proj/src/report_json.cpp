#include "cliquelb/report_json.hpp"

namespace cliquelb {

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const VerificationReport& report) {
  Json violations = Json::array();
  for (const auto& [i, j] : report.item3_violations) {
    // reported 1-based
    violations.push_back({i + 1, j + 1});
  }
  return Json{
      {"passed", report.passed},
      {"k_value", report.k_value},
      {"item1", {{"edge_count", report.edge_count}, {"m_bound", report.m_bound}, {"ok", report.item1_ok}}},
      {"item2", {{"union_ok", report.item2_union_ok}, {"all_k22", report.item2_all_k22}}},
      {"item3", {{"violations", violations}, {"ok", report.item3_violations.empty()}}},
      {"item4", {{"ha_bipartite", report.item4_ha_bipartite}, {"hb_bipartite", report.item4_hb_bipartite}}},
  };
}

Json to_json(const ConstructionStats& stats) {
  return Json{
      {"k_total", stats.k_total},
      {"pairs_over_threshold_a", stats.pairs_over_threshold_a},
      {"pairs_over_threshold_b", stats.pairs_over_threshold_b},
      {"h_size", stats.h_size},
      {"edge_count", stats.edge_count},
      {"random_edge_count", stats.random_edge_count},
      {"expected_k", stats.expected_k},
  };
}

Json to_json(const ReductionReport& report) {
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"x", m.x}, {"y", m.y}, {"disj", m.disj_value}, {"clique_found", m.clique_found}});
  }
  return Json{
      {"passed", report.passed},
      {"instances_checked", report.instances_checked},
      {"cut_size", report.cut_size},
      {"mismatches", mismatches},
  };
}

Json to_json(const BitLedger& ledger) {
  Json phases = Json::array();
  for (const auto& phase : ledger.phases()) {
    phases.push_back({{"label", phase.label}, {"direction", to_string(phase.direction)}, {"bits", phase.bits}});
  }
  return phases;
}

Json protocol_json(const PartitionedGraph& pg, const ProtocolResult& result, const ProtocolVerdict& verdict) {
  Json cliques = Json::array();
  for (const auto& c : result.cliques) {
    cliques.push_back(to_json(c));
  }
  return Json{
      {"case", to_string(result.case_taken)},
      {"n", pg.n_vertices()},
      {"cut_size", pg.cut_edges().size()},
      {"low_degree", to_json(result.low_degree_set)},
      {"high_degree", to_json(result.high_degree_set)},
      {"phases", to_json(result.ledger)},
      {"total_bits", result.ledger.total_bits()},
      {"budget", protocol_budget(pg)},
      {"within_budget", verdict.within_budget},
      {"cliques", cliques},
      {"correct_vs_oracle", verdict.correct},
  };
}

Json congest_json(const SimulationTrace& trace, const std::optional<PartitionedGraph>& pg) {
  Json out{
      {"rounds_used", trace.rounds_used},
      {"bandwidth", trace.bandwidth_b},
      {"id_width", trace.id_width},
      {"detected", trace.any_detection()},
      {"detecting_nodes", trace.detecting_nodes()},
  };
  std::uint64_t cut = trace.topology.n_edges();
  if (pg) {
    out["cut_bits"] = measure_cut_traffic(trace, *pg);
    cut = pg->cut_edges().size();
  }
  out["bound_r_m_b"] = trace.rounds_used * cut * trace.bandwidth_b;
  return out;
}

}  // namespace cliquelb
