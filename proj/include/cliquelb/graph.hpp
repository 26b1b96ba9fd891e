#pragma once

// Core graph types and the exhaustive enumeration routines that the rest of
// the library is checked against.

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquelb {

using VertexId = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Raised for every precondition violation on a public entry point.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge kept in canonical (low, high) order.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge canonical(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);
  explicit VertexSet(std::vector<VertexId> ids);

  [[nodiscard]] const std::vector<VertexId>& members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(VertexId v) const;
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<VertexId> members_;
};

/// Simple undirected graph on vertices 0..n-1 with a bitset adjacency matrix.
class Graph {
 public:
  Graph() = default;
  /// Self-loops and out-of-range endpoints throw; duplicate pairs collapse.
  Graph(std::size_t n_vertices, std::span<const Edge> edges);
  Graph(std::size_t n_vertices, std::initializer_list<Edge> edges)
      : Graph(n_vertices, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] std::size_t n_vertices() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t n_edges() const { return edges_.size(); }
  /// Canonical edges in ascending lexicographic order.
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] bool has_edge(VertexId a, VertexId b) const;
  [[nodiscard]] const Bitset& neighbors(VertexId v) const { return adjacency_.at(v); }
  [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency_.at(v).count(); }
  [[nodiscard]] std::vector<VertexId> neighbor_list(VertexId v) const;

  /// Subgraph on `keep`, relabelled to 0..|keep|-1 in ascending id order.
  [[nodiscard]] Graph induced(const VertexSet& keep) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && n_vertices() == other.n_vertices(); }

 private:
  std::vector<Edge> edges_;
  std::vector<Bitset> adjacency_;
};

/// Bipartite graph G = (A, B, E). A-vertex i maps to general id i and
/// B-vertex j to n_a + j.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t n_a, std::size_t n_b, std::span<const std::pair<VertexId, VertexId>> edges);
  BipartiteGraph(std::size_t n_a, std::size_t n_b, std::initializer_list<std::pair<VertexId, VertexId>> edges)
      : BipartiteGraph(n_a, n_b, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size())) {}

  [[nodiscard]] std::size_t n_a() const { return a_rows_.size(); }
  [[nodiscard]] std::size_t n_b() const { return b_rows_.size(); }
  [[nodiscard]] std::size_t n_edges() const { return edges_.size(); }
  /// (a, b) pairs sorted ascending.
  [[nodiscard]] const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  [[nodiscard]] bool has_edge(VertexId a, VertexId b) const { return a_rows_.at(a).test(b); }
  /// B-neighbourhood of an A-vertex, as a bitset over B.
  [[nodiscard]] const Bitset& a_row(VertexId a) const { return a_rows_.at(a); }
  /// A-neighbourhood of a B-vertex, as a bitset over A.
  [[nodiscard]] const Bitset& b_row(VertexId b) const { return b_rows_.at(b); }

  [[nodiscard]] Graph to_graph() const;

  bool operator==(const BipartiteGraph& other) const {
    return n_a() == other.n_a() && n_b() == other.n_b() && edges_ == other.edges_;
  }

 private:
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<Bitset> a_rows_;
  std::vector<Bitset> b_rows_;
};

/// One copy of K_{2,2}: A-pair and B-pair, both in ascending order.
struct Biclique {
  VertexId a1 = 0;
  VertexId a2 = 0;
  VertexId b1 = 0;
  VertexId b2 = 0;

  [[nodiscard]] std::pair<VertexId, VertexId> a_pair() const { return {a1, a2}; }
  [[nodiscard]] std::pair<VertexId, VertexId> b_pair() const { return {b1, b2}; }
  /// The four vertices under the bipartite-to-general id mapping.
  [[nodiscard]] VertexSet to_vertex_set(std::size_t n_a) const;

  auto operator<=>(const Biclique&) const = default;
};

/// Every K_{2,2} of `g`, in lexicographic (a1, a2, b1, b2) order.
[[nodiscard]] std::vector<Biclique> enumerate_k22(const BipartiteGraph& g);

/// Every clique (maximal or not) with at least `min_size` vertices, each once,
/// in lexicographic order of the sorted member lists.
[[nodiscard]] std::vector<VertexSet> enumerate_cliques(const Graph& g, std::size_t min_size);

/// Two-colouring by BFS from the lowest unvisited id (coloured 0), or nullopt.
[[nodiscard]] std::optional<std::vector<std::uint8_t>> is_bipartite(const Graph& g);

/// True iff some `ell`-subset of vertices is pairwise adjacent.
[[nodiscard]] bool contains_clique(const Graph& g, std::size_t ell);

/// Graph on `n` vertices whose edges are the given pairs (e.g. H_A from A-pairs).
[[nodiscard]] Graph graph_from_pairs(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs);

}  // namespace cliquelb
