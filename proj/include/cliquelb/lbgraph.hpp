#pragma once

// Randomised construction of lower-bound graphs (random bipartite graph,
// peeling, assembly) and an exhaustive checker for the four lower-bound-graph
// conditions.

#include "cliquelb/graph.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cliquelb {

using VertexPair = std::pair<VertexId, VertexId>;

/// A bipartite graph H together with its designated K_{2,2} family and the
/// side samples A' and B' that make H_A and H_B two-colourable.
struct LowerBoundGraph {
  BipartiteGraph base;
  std::vector<Biclique> designated;
  VertexSet side_sample_a;
  VertexSet side_sample_b;

  /// |A| (= |B| for graphs produced here).
  [[nodiscard]] std::size_t n() const { return base.n_a(); }
  /// Distinct A-pairs of the designated family, sorted.
  [[nodiscard]] std::vector<VertexPair> ha_edges() const;
  /// Distinct B-pairs of the designated family, sorted.
  [[nodiscard]] std::vector<VertexPair> hb_edges() const;

  bool operator==(const LowerBoundGraph&) const = default;
};

struct VerificationReport {
  std::size_t edge_count = 0;
  std::size_t m_bound = 0;
  bool item1_ok = false;
  /// base edges == union of the designated E_K
  bool item2_union_ok = false;
  /// every designated set is a genuine K_{2,2} of base
  bool item2_all_k22 = false;
  /// ordered (i, j), i != j, 0-based, where A(E_i) + B(E_j) induces K_{2,2}
  std::vector<std::pair<std::size_t, std::size_t>> item3_violations;
  bool item4_ha_bipartite = false;
  bool item4_hb_bipartite = false;
  std::size_t k_value = 0;
  bool passed = false;
};

struct ConstructionStats {
  std::size_t k_total = 0;
  std::size_t pairs_over_threshold_a = 0;
  std::size_t pairs_over_threshold_b = 0;
  std::size_t h_size = 0;
  std::size_t edge_count = 0;
  /// |E| of the random graph before peeling.
  std::size_t random_edge_count = 0;
  double expected_k = 0.0;
};

struct SideSamples {
  VertexSet a;
  VertexSet b;
};

/// Peeling output plus instrumentation of the forbidden-pair bookkeeping.
struct PeelOutcome {
  LowerBoundGraph graph;
  std::size_t k_total = 0;
  std::size_t pairs_over_threshold_a = 0;
  std::size_t pairs_over_threshold_b = 0;
  /// Largest number of pair insertions into F_A (resp. F_B) made by a single acceptance.
  std::size_t max_forbid_a_per_accept = 0;
  std::size_t max_forbid_b_per_accept = 0;
};

struct ConstructionResult {
  LowerBoundGraph graph;
  ConstructionStats stats;
};

struct StatSummary {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct LemmaStatistics {
  std::size_t n = 0;
  std::vector<std::pair<std::uint64_t, ConstructionStats>> per_seed;
  StatSummary k_total;
  StatSummary pairs_over_threshold_a;
  StatSummary pairs_over_threshold_b;
  StatSummary h_size;
  StatSummary edge_count;
  double expected_k = 0.0;
};

/// Pair multiplicity threshold used by the peeling guard.
inline constexpr std::size_t kPairMultiplicityLimit = 6;

/// |A| = |B| = n, each of the n^2 pairs kept iff one uniform draw is < p.
/// Draws are taken in row-major (a, b) order.
[[nodiscard]] BipartiteGraph generate_random_bipartite(std::size_t n, double p, std::uint64_t seed);

/// A' then B', one coin per vertex in id order.
[[nodiscard]] SideSamples sample_sides(std::size_t n_a, std::size_t n_b, std::uint64_t seed);

[[nodiscard]] PeelOutcome peel_with_samples(const BipartiteGraph& g, const SideSamples& samples);
[[nodiscard]] LowerBoundGraph peel(const BipartiteGraph& g, std::uint64_t seed);

/// C(n,2)^2 p^4 with p = n^{-1/2}.
[[nodiscard]] double expected_k22_count(std::size_t n);

/// Random graph with p = 1/sqrt(n) and seed derive_seed(seed, "edges"), then
/// peeling with derive_seed(seed, "sample").
[[nodiscard]] ConstructionResult construct_lower_bound_graph(std::size_t n, std::uint64_t seed);

[[nodiscard]] VerificationReport verify_lower_bound_graph(const LowerBoundGraph& lbg, std::size_t m_bound);

/// Runs the construction once per seed (optionally on several threads) and
/// aggregates; per_seed keeps the input seed order.
[[nodiscard]] LemmaStatistics lemma_statistics(std::size_t n, std::span<const std::uint64_t> seeds,
                                               unsigned threads = 1);

/// Least-squares slope of log(y) against log(x).
[[nodiscard]] double loglog_slope(std::span<const double> xs, std::span<const double> ys);

/// The 4+4 vertex example: a_i ~ b_{i-1}, b_i, b_{i+1} (cyclic), designated
/// sets {a_i, a_{i+1}, b_i, b_{i+1}}, A' = {a_1, a_3}, B' = {b_1, b_3}.
[[nodiscard]] LowerBoundGraph example_lower_bound_graph();

}  // namespace cliquelb
