// Acceptance suite: one PASS/FAIL line per criterion, then a determinism
// rerun that compares the serialised results byte for byte.
//
// Exit status is 0 only if every line passes.

#include "cliquelb/congest.hpp"
#include "cliquelb/io.hpp"
#include "cliquelb/lbgraph.hpp"
#include "cliquelb/random.hpp"
#include "cliquelb/reduction.hpp"
#include "cliquelb/report_json.hpp"
#include "cliquelb/twoparty.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

using namespace cliquelb;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  Json data;  // structured output, compared by the determinism check
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  std::function<Outcome()> run;
};

unsigned worker_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome fixture_verification() {
  const LowerBoundGraph lbg = load_lbg(CLIQUELB_DATA_DIR "/example_4x4.lbg");
  const VerificationReport r = verify_lower_bound_graph(lbg, 12);
  Outcome o;
  o.pass = r.passed && r.k_value == 4 && r.edge_count == 12 && r.item1_ok && r.item2_union_ok && r.item2_all_k22 &&
           r.item3_violations.empty() && r.item4_ha_bipartite && r.item4_hb_bipartite;
  o.detail = fmt("k=%zu m=%zu items 1..4: %d%d%d%d", r.k_value, r.edge_count, r.item1_ok,
                 r.item2_union_ok && r.item2_all_k22, r.item3_violations.empty(),
                 r.item4_ha_bipartite && r.item4_hb_bipartite);
  o.data = to_json(r);
  return o;
}

Outcome reduction_exhaustive() {
  const LowerBoundGraph lbg = load_lbg(CLIQUELB_DATA_DIR "/example_4x4.lbg");
  Outcome o;
  o.pass = true;
  o.data = Json::object();
  for (std::size_t ell : {4U, 5U, 6U}) {
    const ReductionReport r = check_reduction(lbg, ell, Exhaustive{}, worker_threads());
    o.pass = o.pass && r.passed && r.instances_checked == 256 && r.mismatches.empty();
    o.detail += fmt("ell=%zu: %zu pairs, %zu mismatches; ", ell, r.instances_checked, r.mismatches.size());
    o.data["ell_" + std::to_string(ell)] = to_json(r);
  }
  return o;
}

Outcome generated_graphs_verify() {
  Outcome o;
  o.pass = true;
  std::size_t failures = 0;
  std::size_t total = 0;
  o.data = Json::array();
  for (std::size_t n : {32U, 64U, 128U}) {
    const auto m_bound = static_cast<std::size_t>(std::floor(2.0 * std::pow(static_cast<double>(n), 1.5)));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const ConstructionResult c = construct_lower_bound_graph(n, seed);
      const VerificationReport r = verify_lower_bound_graph(c.graph, m_bound);
      ++total;
      failures += r.passed ? 0 : 1;
      o.data.push_back(Json{{"n", n}, {"seed", seed}, {"report", to_json(r)}});
    }
  }
  o.pass = failures == 0;
  o.detail = fmt("%zu/%zu constructions pass with m = 2 n^1.5", total - failures, total);
  return o;
}

/// The runs behind criteria 4 and 5: n = 256, seeds 1..20. Recomputed on
/// every call so the determinism rerun really reruns them.
LemmaStatistics stats_256() {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 1; s <= 20; ++s) {
    seeds.push_back(s);
  }
  return lemma_statistics(256, seeds, worker_threads());
}

Json per_seed_json(const LemmaStatistics& ls) {
  Json rows = Json::array();
  for (const auto& [seed, st] : ls.per_seed) {
    Json row = to_json(st);
    row["seed"] = seed;
    rows.push_back(row);
  }
  return rows;
}

Outcome k22_count_statistic() {
  const LemmaStatistics ls = stats_256();
  const double expected = expected_k22_count(256);
  const double floor_value = 0.9 * expected;
  std::size_t below = 0;
  for (const auto& [seed, st] : ls.per_seed) {
    below += static_cast<double>(st.k_total) > floor_value ? 0 : 1;
  }
  const bool mean_ok = std::abs(ls.k_total.mean - expected) <= 0.1 * expected;
  Outcome o;
  o.pass = below == 0 && mean_ok;
  o.detail = fmt("E=%.2f mean=%.1f (within 10%%: %s) min=%.0f floor=%.1f runs at or below floor: %zu/20", expected,
                 ls.k_total.mean, mean_ok ? "yes" : "no", ls.k_total.min, floor_value, below);
  o.data = Json{{"expected", expected}, {"runs", per_seed_json(ls)}};
  return o;
}

Outcome pair_multiplicity_statistic() {
  const LemmaStatistics ls = stats_256();
  const std::size_t limit = 256 * 256 / 10;
  std::size_t over = 0;
  for (const auto& [seed, st] : ls.per_seed) {
    over += st.pairs_over_threshold_a <= limit ? 0 : 1;
  }
  Outcome o;
  o.pass = over == 0;
  o.detail = fmt("max A-pairs over 6 = %.0f (B: %.0f), limit %zu, runs over limit: %zu", ls.pairs_over_threshold_a.max,
                 ls.pairs_over_threshold_b.max, limit, over);
  o.data = Json{{"limit", limit}, {"max_a", ls.pairs_over_threshold_a.max}, {"max_b", ls.pairs_over_threshold_b.max}};
  return o;
}

Outcome scaling_slopes() {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    seeds.push_back(s);
  }
  std::vector<double> ns;
  std::vector<double> h_means;
  std::vector<double> e_means;
  Outcome o;
  o.data = Json::array();
  for (std::size_t n : {64U, 128U, 256U, 512U}) {
    const LemmaStatistics ls = lemma_statistics(n, seeds, worker_threads());
    ns.push_back(static_cast<double>(n));
    h_means.push_back(ls.h_size.mean);
    e_means.push_back(ls.edge_count.mean);
    o.data.push_back(Json{{"n", n}, {"mean_h_size", ls.h_size.mean}, {"mean_edge_count", ls.edge_count.mean}});
  }
  const double h_slope = loglog_slope(ns, h_means);
  const double e_slope = loglog_slope(ns, e_means);
  const bool h_ok = h_slope >= 1.7 && h_slope <= 2.3;
  const bool e_ok = e_slope >= 1.3 && e_slope <= 1.7;
  o.pass = h_ok && e_ok;
  o.detail = fmt("slope |H| = %.3f in [1.7,2.3]: %s; slope |E(H)| = %.3f in [1.3,1.7]: %s", h_slope,
                 h_ok ? "yes" : "no", e_slope, e_ok ? "yes" : "no");
  o.data = Json{{"points", o.data}, {"h_slope", h_slope}, {"edge_slope", e_slope}};
  return o;
}

/// The 200 protocol instances shared by criteria 7 and 8.
std::vector<PartitionedGraph> protocol_sweep() {
  std::vector<PartitionedGraph> out;
  const std::size_t ns[] = {8, 12, 16};
  const double qs[] = {0.2, 0.5, 0.8};
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(i, "protocol-sweep"));
    const std::size_t n = ns[i % 3];
    const double q = qs[(i / 3) % 3];
    const Graph g = oracle::random_graph(n, q, rng);
    out.emplace_back(g, oracle::random_balanced_side(n, rng));
  }
  return out;
}

Outcome protocol_sweep_correctness() {
  std::size_t wrong = 0;
  std::size_t over_budget = 0;
  Outcome o;
  o.data = Json::array();
  for (const PartitionedGraph& pg : protocol_sweep()) {
    const ProtocolResult r = run_protocol(pg);
    const bool correct = r.cliques == oracle::all_subset_cliques(pg.graph(), 1);
    const std::uint64_t budget = 2 * ceil_sqrt(pg.n_vertices()) * pg.cut_edges().size();
    const bool within = r.ledger.total_bits() <= budget;
    wrong += correct ? 0 : 1;
    over_budget += within ? 0 : 1;
    o.data.push_back(Json{{"n", pg.n_vertices()},
                          {"cut_size", pg.cut_edges().size()},
                          {"case", to_string(r.case_taken)},
                          {"total_bits", r.ledger.total_bits()},
                          {"cliques", r.cliques.size()},
                          {"correct", correct}});
  }
  o.pass = wrong == 0 && over_budget == 0;
  o.detail = fmt("200 instances: %zu wrong clique sets, %zu over 2*ceil(sqrt n)*|C|", wrong, over_budget);
  return o;
}

Outcome protocol_case_coverage() {
  auto qualifies = [](const PartitionedGraph& pg, const ProtocolResult& r) {
    const std::uint64_t a = pg.side_a().size();
    return r.case_taken == CutCase::LargeCut && r.ledger.total_bits() == a * a &&
           a * a <= ceil_sqrt(pg.n_vertices()) * pg.cut_edges().size();
  };
  std::size_t sweep_hits = 0;
  for (const PartitionedGraph& pg : protocol_sweep()) {
    sweep_hits += qualifies(pg, run_protocol(pg)) ? 1 : 0;
  }
  std::vector<Edge> k16;
  for (VertexId u = 0; u < 16; ++u) {
    for (VertexId v = u + 1; v < 16; ++v) {
      k16.push_back({u, v});
    }
  }
  const PartitionedGraph witness(Graph(16, k16), VertexSet{0, 1, 2, 3, 4, 5, 6, 7});
  const ProtocolResult wr = run_protocol(witness);
  const bool witness_ok = qualifies(witness, wr) && verify_protocol(witness, wr).correct;
  Outcome o;
  o.pass = sweep_hits > 0 || witness_ok;
  o.detail = fmt("random sweep large-cut hits: %zu; K16 8|8 witness: case=%s bits=%llu <= %llu: %s", sweep_hits,
                 to_string(wr.case_taken), static_cast<unsigned long long>(wr.ledger.total_bits()),
                 static_cast<unsigned long long>(ceil_sqrt(16) * witness.cut_edges().size()),
                 witness_ok ? "yes" : "no");
  o.data = Json{{"sweep_hits", sweep_hits}, {"witness", protocol_json(witness, wr, verify_protocol(witness, wr))}};
  return o;
}

Outcome folklore_simulation() {
  std::size_t detect_mismatch = 0;
  std::size_t round_mismatch = 0;
  std::size_t bound_violations = 0;
  std::size_t directed_violations = 0;
  std::size_t runs = 0;
  std::uint64_t worst_num = 0;
  std::uint64_t worst_den = 1;
  Outcome o;
  o.data = Json::array();
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(derive_seed(i, "folklore"));
    const std::size_t n = 10 + rng.below(23);
    const Graph base = oracle::random_graph(n, 0.1 + 0.4 * rng.uniform01(), rng);
    const std::uint64_t b = 1 + rng.below(16);
    const VertexSet side = oracle::random_balanced_side(n, rng);
    for (std::size_t ell : {4U, 5U}) {
      std::vector<VertexId> planted = oracle::random_balanced_side(n, rng).members();
      planted.resize(ell);
      for (const Graph& g : {base, oracle::plant_clique(base, planted)}) {
        const SimulationTrace t = run_folklore_detection(CongestNetwork(g, b), ell);
        ++runs;
        const bool exists = !oracle::clique_members_by_combinations(g, ell).empty();
        detect_mismatch += t.any_detection() == exists ? 0 : 1;

        std::uint64_t expected_rounds = 0;
        for (VertexId v = 0; v < n; ++v) {
          expected_rounds = std::max<std::uint64_t>(expected_rounds, (g.degree(v) * t.id_width + b - 1) / b);
        }
        round_mismatch += t.rounds_used == expected_rounds ? 0 : 1;

        const PartitionedGraph pg(g, side);
        const std::uint64_t measured = measure_cut_traffic(t, pg);
        const std::uint64_t bound = t.rounds_used * pg.cut_edges().size() * b;
        bound_violations += measured <= bound ? 0 : 1;
        std::uint64_t a_to_b = 0;
        for (const WireMessage& m : t.messages) {
          if (pg.on_side_a(m.from) && !pg.on_side_a(m.to)) {
            a_to_b += m.bits;
          }
        }
        directed_violations += (a_to_b <= bound && measured - a_to_b <= bound) ? 0 : 1;
        if (bound > 0 && measured * worst_den > worst_num * bound) {
          worst_num = measured;
          worst_den = bound;
        }
        o.data.push_back(Json{{"n", n},
                              {"ell", ell},
                              {"bandwidth", b},
                              {"rounds_used", t.rounds_used},
                              {"detected", t.any_detection()},
                              {"cut_bits", measured},
                              {"bound_r_c_b", bound}});
      }
    }
  }
  o.pass = detect_mismatch == 0 && round_mismatch == 0 && bound_violations == 0;
  o.detail = fmt("%zu runs: detection mismatches %zu, round-formula mismatches %zu, cut bits > r*|C|*b in %zu "
                 "(worst ratio %.2f); per-direction bound violated in %zu",
                 runs, detect_mismatch, round_mismatch, bound_violations,
                 static_cast<double>(worst_num) / static_cast<double>(worst_den), directed_violations);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "fixture verification", 1.0, fixture_verification},
      {2, "reduction equivalence, exhaustive", 10.0, reduction_exhaustive},
      {3, "generated graphs verify", 120.0, generated_graphs_verify},
      {4, "K22 count at n=256", 300.0, k22_count_statistic},
      {5, "pair multiplicity at n=256", 300.0, pair_multiplicity_statistic},
      {6, "scaling slopes", 1200.0, scaling_slopes},
      {7, "protocol correctness sweep", 120.0, protocol_sweep_correctness},
      {8, "protocol case coverage", 120.0, protocol_case_coverage},
      {9, "folklore simulation", 60.0, folklore_simulation},
  };

  bool all_pass = true;
  std::vector<std::string> first_run;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.time_limit_s;
    const bool pass = o.pass && in_time;
    all_pass = all_pass && pass;
    std::printf("[%s] %d. %s: %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs, c.time_limit_s);
    std::fflush(stdout);
    first_run.push_back(o.data.dump());
  }

  std::size_t differing = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception&) {
      o.data = "exception";
    }
    differing += o.data.dump() == first_run[i] ? 0 : 1;
  }
  const bool det = differing == 0;
  all_pass = all_pass && det;
  std::printf("[%s] 10. determinism: rerun of 1-9 gives byte-identical structured output for %zu/%zu criteria\n",
              det ? "PASS" : "FAIL", criteria.size() - differing, criteria.size());
  return all_pass ? 0 : 1;
}
