#include "cliquelb/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

namespace cliquelb {

namespace {

constexpr auto npos = Bitset::npos;

void check_vertex(VertexId v, std::size_t n, const char* what) {
  if (v >= n) {
    throw InvalidParameter(std::string(what) + ": vertex id " + std::to_string(v) + " out of range " +
                           std::to_string(n));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet::VertexSet(std::vector<VertexId> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(VertexId v) const { return std::binary_search(members_.begin(), members_.end(), v); }

Graph::Graph(std::size_t n_vertices, std::span<const Edge> edges) : adjacency_(n_vertices, Bitset(n_vertices)) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    check_vertex(e.u, n_vertices, "Graph");
    check_vertex(e.v, n_vertices, "Graph");
    if (e.u == e.v) {
      throw InvalidParameter("Graph: self-loop on vertex " + std::to_string(e.u));
    }
    edges_.push_back(Edge::canonical(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u].set(e.v);
    adjacency_[e.v].set(e.u);
  }
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  return a < n_vertices() && b < n_vertices() && adjacency_[a].test(b);
}

std::vector<VertexId> Graph::neighbor_list(VertexId v) const {
  std::vector<VertexId> out;
  const Bitset& row = adjacency_.at(v);
  for (auto u = row.find_first(); u != npos; u = row.find_next(u)) {
    out.push_back(static_cast<VertexId>(u));
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Edge> sub;
  const auto& ids = keep.members();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    check_vertex(ids[i], n_vertices(), "Graph::induced");
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (adjacency_[ids[i]].test(ids[j])) {
        sub.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
      }
    }
  }
  return Graph(ids.size(), sub);
}

BipartiteGraph::BipartiteGraph(std::size_t n_a, std::size_t n_b,
                               std::span<const std::pair<VertexId, VertexId>> edges)
    : edges_(edges.begin(), edges.end()), a_rows_(n_a, Bitset(n_b)), b_rows_(n_b, Bitset(n_a)) {
  for (const auto& [a, b] : edges_) {
    check_vertex(a, n_a, "BipartiteGraph (A side)");
    check_vertex(b, n_b, "BipartiteGraph (B side)");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [a, b] : edges_) {
    a_rows_[a].set(b);
    b_rows_[b].set(a);
  }
}

Graph BipartiteGraph::to_graph() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  const auto offset = static_cast<VertexId>(n_a());
  for (const auto& [a, b] : edges_) {
    out.push_back({a, offset + b});
  }
  return Graph(n_a() + n_b(), out);
}

VertexSet Biclique::to_vertex_set(std::size_t n_a) const {
  const auto offset = static_cast<VertexId>(n_a);
  return VertexSet{a1, a2, offset + b1, offset + b2};
}

std::vector<Biclique> enumerate_k22(const BipartiteGraph& g) {
  std::vector<Biclique> out;
  const auto n_a = static_cast<VertexId>(g.n_a());
  for (VertexId a1 = 0; a1 < n_a; ++a1) {
    for (VertexId a2 = a1 + 1; a2 < n_a; ++a2) {
      const Bitset common = g.a_row(a1) & g.a_row(a2);
      for (auto b1 = common.find_first(); b1 != npos; b1 = common.find_next(b1)) {
        for (auto b2 = common.find_next(b1); b2 != npos; b2 = common.find_next(b2)) {
          out.push_back({a1, a2, static_cast<VertexId>(b1), static_cast<VertexId>(b2)});
        }
      }
    }
  }
  return out;
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, std::size_t min_size) {
  if (min_size < 1) {
    throw InvalidParameter("enumerate_cliques: min_size must be >= 1");
  }
  const std::size_t n = g.n_vertices();
  std::vector<VertexSet> out;
  std::vector<VertexId> current;

  // Extends `current` only by candidates with larger ids, so each clique is
  // produced once and in lexicographic pre-order.
  std::function<void(const Bitset&)> extend = [&](const Bitset& candidates) {
    for (auto v = candidates.find_first(); v != npos; v = candidates.find_next(v)) {
      current.push_back(static_cast<VertexId>(v));
      Bitset later = g.neighbors(static_cast<VertexId>(v)) & candidates;
      // candidates below v are already handled by earlier branches
      later &= ~Bitset(n).set(0, v + 1, true);
      if (current.size() >= min_size) {
        out.emplace_back(current);
      }
      if (current.size() + later.count() >= min_size && later.any()) {
        extend(later);
      }
      current.pop_back();
    }
  };

  if (n > 0) {
    Bitset all(n);
    all.set();
    extend(all);
  }
  return out;
}

std::optional<std::vector<std::uint8_t>> is_bipartite(const Graph& g) {
  constexpr std::uint8_t unset = 2;
  const std::size_t n = g.n_vertices();
  std::vector<std::uint8_t> side(n, unset);
  std::deque<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (side[root] != unset) {
      continue;
    }
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      const Bitset& row = g.neighbors(v);
      for (auto u = row.find_first(); u != npos; u = row.find_next(u)) {
        if (side[u] == unset) {
          side[u] = static_cast<std::uint8_t>(1 - side[v]);
          queue.push_back(static_cast<VertexId>(u));
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool contains_clique(const Graph& g, std::size_t ell) {
  if (ell < 1) {
    throw InvalidParameter("contains_clique: ell must be >= 1");
  }
  const std::size_t n = g.n_vertices();
  if (ell > n) {
    return false;
  }
  if (ell == 1) {
    return true;
  }
  if (ell == 2) {
    return g.n_edges() > 0;
  }

  std::function<bool(const Bitset&, std::size_t)> search = [&](const Bitset& candidates, std::size_t needed) {
    if (needed == 0) {
      return true;
    }
    if (candidates.count() < needed) {
      return false;
    }
    for (auto v = candidates.find_first(); v != npos; v = candidates.find_next(v)) {
      Bitset next = g.neighbors(static_cast<VertexId>(v)) & candidates;
      next &= ~Bitset(n).set(0, v + 1, true);
      if (search(next, needed - 1)) {
        return true;
      }
    }
    return false;
  };

  Bitset all(n);
  for (VertexId v = 0; v < n; ++v) {
    // a vertex of degree < ell-1 cannot lie in an ell-clique
    if (g.degree(v) + 1 >= ell) {
      all.set(v);
    }
  }
  return search(all, ell);
}

Graph graph_from_pairs(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    edges.push_back({a, b});
  }
  return Graph(n, edges);
}

}  // namespace cliquelb
