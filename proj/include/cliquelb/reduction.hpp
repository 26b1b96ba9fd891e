#pragma once

// Set-disjointness to clique-detection reduction over a lower-bound graph.

#include "cliquelb/graph.hpp"
#include "cliquelb/lbgraph.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace cliquelb {

/// Two k-bit inputs, index 0-based.
struct DisjInstance {
  std::vector<bool> x;
  std::vector<bool> y;

  DisjInstance(std::vector<bool> x_bits, std::vector<bool> y_bits);
  /// Parses strings of '0'/'1' characters, first character = index 1.
  static DisjInstance from_strings(const std::string& x_bits, const std::string& y_bits);

  [[nodiscard]] std::size_t k() const { return x.size(); }
};

[[nodiscard]] bool disj(const DisjInstance& inst);

/// A graph with a vertex split V_A | V_B and its edge set broken into
/// E_A, E_B and the cut C.
class PartitionedGraph {
 public:
  PartitionedGraph() = default;
  /// Every vertex not in `side_a` goes to side B.
  PartitionedGraph(Graph graph, const VertexSet& side_a);

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] std::size_t n_vertices() const { return graph_.n_vertices(); }
  [[nodiscard]] const VertexSet& side_a() const { return side_a_; }
  [[nodiscard]] const VertexSet& side_b() const { return side_b_; }
  [[nodiscard]] bool on_side_a(VertexId v) const { return on_a_.at(v); }
  [[nodiscard]] const std::vector<Edge>& cut_edges() const { return cut_; }
  [[nodiscard]] const std::vector<Edge>& side_a_edges() const { return edges_a_; }
  [[nodiscard]] const std::vector<Edge>& side_b_edges() const { return edges_b_; }

 private:
  Graph graph_;
  VertexSet side_a_;
  VertexSet side_b_;
  std::vector<bool> on_a_;
  std::vector<Edge> cut_;
  std::vector<Edge> edges_a_;
  std::vector<Edge> edges_b_;
};

/// Vertex numbering of G': A-vertex i -> i, B-vertex j -> n + j,
/// fresh clique vertex t -> 2n + t. V_A = A plus fresh vertices.
[[nodiscard]] PartitionedGraph build_instance(const LowerBoundGraph& lbg, const DisjInstance& inst, std::size_t ell);

struct ReductionMismatch {
  std::string x;
  std::string y;
  bool disj_value = false;
  bool clique_found = false;
};

struct ReductionReport {
  std::size_t instances_checked = 0;
  std::vector<ReductionMismatch> mismatches;
  std::size_t cut_size = 0;
  bool passed = false;
};

struct Exhaustive {};
struct Sampled {
  std::size_t count = 0;
  std::uint64_t seed = 0;
};
using CheckMode = std::variant<Exhaustive, Sampled>;

/// Exhaustive mode runs all 4^k input pairs (x-major order) and is limited to k <= 10.
[[nodiscard]] ReductionReport check_reduction(const LowerBoundGraph& lbg, std::size_t ell, const CheckMode& mode,
                                              unsigned threads = 1);

inline constexpr std::size_t kExhaustiveMaxK = 10;

/// rounds * |C| * bandwidth for the partition produced by build_instance.
[[nodiscard]] std::uint64_t cut_traffic_bound(const LowerBoundGraph& lbg, std::size_t ell, std::uint64_t rounds,
                                              std::uint64_t bandwidth);

/// Renders bits as a '0'/'1' string, index 1 first.
[[nodiscard]] std::string bits_to_string(const std::vector<bool>& bits);

}  // namespace cliquelb
