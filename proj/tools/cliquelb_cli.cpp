// Command-line front end: lower-bound graph generation and checking,
// reduction checking, the two-party protocol and the CONGEST simulation.
//
// Exit status: 0 success / check passed, 1 check failed, 2 bad invocation.

#include "cliquelb/congest.hpp"
#include "cliquelb/io.hpp"
#include "cliquelb/lbgraph.hpp"
#include "cliquelb/reduction.hpp"
#include "cliquelb/report_json.hpp"
#include "cliquelb/twoparty.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cliquelb;

constexpr std::uint64_t kDefaultSeed = 1;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string out;
  /// Empty means the command default: csv for lb-stats, json elsewhere.
  std::string format;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

/// Writes to --out when given, else stdout.
void emit(const GlobalOptions& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out);
  if (!file) {
    throw InvalidParameter("cannot write " + opts.out);
  }
  file << text;
}

void require_json(const GlobalOptions& opts, const char* command) {
  if (!opts.format.empty() && opts.format != "json") {
    throw InvalidParameter(std::string(command) + " only supports --format json");
  }
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(item, &used);
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
      out.push_back(static_cast<std::size_t>(value));
    } catch (const std::logic_error&) {
      throw InvalidParameter("--n-list: not an integer: '" + item + "'");
    }
  }
  if (out.empty()) {
    throw InvalidParameter("--n-list is empty");
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cliquelb: lower-bound graphs, reductions and protocols for clique detection"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--out", opts.out, "Output file (default: stdout)");
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", opts.seed, "Seed (default 1)");
  app.add_option("--threads", opts.threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  // gen-lb
  std::size_t gen_n = 0;
  auto* gen = app.add_subcommand("gen-lb", "Construct a lower-bound graph");
  gen->add_option("--n", gen_n, "Vertices per side")->required();

  // verify-lb
  std::string verify_in;
  std::size_t verify_m = 0;
  auto* verify = app.add_subcommand("verify-lb", "Check the four lower-bound-graph conditions");
  verify->add_option("--in", verify_in, "LBG file")->required()->check(CLI::ExistingFile);
  verify->add_option("--m-bound", verify_m, "Edge bound m")->required();

  // lb-stats
  std::string stats_n_list;
  std::size_t stats_seeds = 0;
  auto* stats = app.add_subcommand("lb-stats", "Construction statistics over several n and seeds");
  stats->add_option("--n-list", stats_n_list, "Comma-separated n values")->required();
  stats->add_option("--seeds", stats_seeds, "Seeds per n (seed, seed+1, ...)")->required();

  // reduce
  std::string reduce_lbg;
  std::string reduce_x;
  std::string reduce_y;
  std::size_t reduce_ell = 4;
  auto* reduce = app.add_subcommand("reduce", "Build G' for a disjointness instance");
  reduce->add_option("--lbg", reduce_lbg, "LBG file")->required()->check(CLI::ExistingFile);
  reduce->add_option("--x", reduce_x, "Alice's bits")->required();
  reduce->add_option("--y", reduce_y, "Bob's bits")->required();
  reduce->add_option("--ell", reduce_ell, "Clique size");

  // check-reduction
  std::string check_lbg;
  std::size_t check_ell = 4;
  bool check_exhaustive = false;
  std::size_t check_samples = 0;
  auto* check = app.add_subcommand("check-reduction", "Compare clique detection with DISJ on many inputs");
  check->add_option("--lbg", check_lbg, "LBG file")->required()->check(CLI::ExistingFile);
  check->add_option("--ell", check_ell, "Clique size");
  auto* exhaustive_flag = check->add_flag("--exhaustive", check_exhaustive, "All 4^k input pairs");
  auto* samples_opt = check->add_option("--samples", check_samples, "Number of random input pairs");
  exhaustive_flag->excludes(samples_opt);

  // protocol
  std::string proto_graph;
  std::string proto_partition;
  bool proto_json = false;
  auto* proto = app.add_subcommand("protocol", "Run the two-party clique-listing protocol");
  proto->add_option("--graph", proto_graph, "Graph file")->required()->check(CLI::ExistingFile);
  proto->add_option("--partition", proto_partition, "Partition file (V_A ids)")->required()->check(CLI::ExistingFile);
  proto->add_flag("--json", proto_json, "Print the full JSON report");

  // congest
  std::string congest_graph;
  std::string congest_partition;
  std::size_t congest_ell = 4;
  std::uint64_t congest_b = 0;
  std::size_t congest_max_n = 256;
  auto* congest = app.add_subcommand("congest", "Simulate neighbourhood-broadcast clique detection");
  congest->add_option("--graph", congest_graph, "Graph file")->required()->check(CLI::ExistingFile);
  congest->add_option("--ell", congest_ell, "Clique size")->required();
  congest->add_option("--bandwidth", congest_b, "Bits per edge per round")->required();
  congest->add_option("--partition", congest_partition, "Partition file for cut metering")->check(CLI::ExistingFile);
  congest->add_option("--max-n", congest_max_n, "Largest graph accepted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*gen) {
      const auto [lbg, st] = construct_lower_bound_graph(gen_n, opts.seed);
      std::ostringstream text;
      write_lbg(text, lbg);
      emit(opts, text.str());
      if (!opts.out.empty()) {
        std::cout << dump(Json{{"n", gen_n}, {"seed", opts.seed}, {"out", opts.out}, {"stats", to_json(st)}});
      }
      return 0;
    }

    if (*verify) {
      require_json(opts, "verify-lb");
      const VerificationReport report = verify_lower_bound_graph(load_lbg(verify_in), verify_m);
      emit(opts, dump(to_json(report)));
      return report.passed ? 0 : kExitFail;
    }

    if (*stats) {
      if (opts.format.empty()) {
        opts.format = "csv";
      }
      std::vector<std::uint64_t> seeds;
      for (std::size_t i = 0; i < stats_seeds; ++i) {
        seeds.push_back(opts.seed + i);
      }
      std::ostringstream text;
      Json runs = Json::array();
      if (opts.format == "csv") {
        text << "n,seed,k_total,h_size,edge_count,pairs_over_threshold_a,pairs_over_threshold_b,expected_k\n";
      }
      for (std::size_t n : parse_n_list(stats_n_list)) {
        const LemmaStatistics ls = lemma_statistics(n, seeds, opts.threads);
        for (const auto& [seed, st] : ls.per_seed) {
          if (opts.format == "csv") {
            text << n << ',' << seed << ',' << st.k_total << ',' << st.h_size << ',' << st.edge_count << ','
                 << st.pairs_over_threshold_a << ',' << st.pairs_over_threshold_b << ',' << st.expected_k << '\n';
          } else {
            Json row = to_json(st);
            row["n"] = n;
            row["seed"] = seed;
            runs.push_back(row);
          }
        }
      }
      emit(opts, opts.format == "csv" ? text.str() : dump(runs));
      return 0;
    }

    if (*reduce) {
      require_json(opts, "reduce");
      if (opts.out.empty()) {
        throw InvalidParameter("reduce needs --out GRAPHFILE");
      }
      const LowerBoundGraph lbg = load_lbg(reduce_lbg);
      const DisjInstance inst = DisjInstance::from_strings(reduce_x, reduce_y);
      const PartitionedGraph pg = build_instance(lbg, inst, reduce_ell);
      {
        std::ofstream graph_file(opts.out);
        std::ofstream partition_file(opts.out + ".partition");
        if (!graph_file || !partition_file) {
          throw InvalidParameter("cannot write " + opts.out);
        }
        write_graph(graph_file, pg.graph());
        write_partition(partition_file, pg.side_a());
      }
      std::cout << dump(Json{{"graph", opts.out},
                             {"partition", opts.out + ".partition"},
                             {"n", pg.n_vertices()},
                             {"m", pg.graph().n_edges()},
                             {"cut_size", pg.cut_edges().size()},
                             {"disj", disj(inst)},
                             {"contains_clique", contains_clique(pg.graph(), reduce_ell)}});
      return 0;
    }

    if (*check) {
      require_json(opts, "check-reduction");
      if (!check_exhaustive && samples_opt->count() == 0) {
        throw InvalidParameter("check-reduction needs --exhaustive or --samples N");
      }
      const CheckMode mode = check_exhaustive ? CheckMode{Exhaustive{}} : CheckMode{Sampled{check_samples, opts.seed}};
      const ReductionReport report = check_reduction(load_lbg(check_lbg), check_ell, mode, opts.threads);
      emit(opts, dump(to_json(report)));
      return report.passed ? 0 : kExitFail;
    }

    if (*proto) {
      require_json(opts, "protocol");
      const PartitionedGraph pg(load_graph(proto_graph), load_partition(proto_partition));
      const ProtocolResult result = run_protocol(pg);
      const ProtocolVerdict verdict = verify_protocol(pg, result);
      const Json report = protocol_json(pg, result, verdict);
      if (proto_json) {
        emit(opts, dump(report));
      } else {
        std::ostringstream text;
        text << "case " << report["case"].get<std::string>() << ", total_bits " << result.ledger.total_bits()
             << ", budget " << protocol_budget(pg) << ", cliques " << result.cliques.size() << ", correct "
             << (verdict.correct ? "yes" : "no") << '\n';
        emit(opts, text.str());
      }
      return verdict.correct && verdict.within_budget ? 0 : kExitFail;
    }

    if (*congest) {
      require_json(opts, "congest");
      Graph g = load_graph(congest_graph);
      if (g.n_vertices() > congest_max_n) {
        throw InvalidParameter("graph has " + std::to_string(g.n_vertices()) + " vertices; --max-n is " +
                               std::to_string(congest_max_n));
      }
      std::optional<PartitionedGraph> pg;
      if (!congest_partition.empty()) {
        pg.emplace(g, load_partition(congest_partition));
      }
      const SimulationTrace trace = run_folklore_detection(CongestNetwork(std::move(g), congest_b), congest_ell);
      emit(opts, dump(congest_json(trace, pg)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
