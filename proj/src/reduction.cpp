#include "cliquelb/reduction.hpp"

#include "cliquelb/parallel.hpp"
#include "cliquelb/random.hpp"

#include <algorithm>

namespace cliquelb {

namespace {

std::vector<bool> parse_bits(const std::string& text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidParameter("bit string may only contain '0' and '1': " + text);
    }
    bits.push_back(c == '1');
  }
  return bits;
}

std::vector<bool> bits_from_mask(std::uint64_t mask, std::size_t k) {
  std::vector<bool> bits(k);
  for (std::size_t i = 0; i < k; ++i) {
    bits[i] = ((mask >> i) & 1U) != 0;
  }
  return bits;
}

std::size_t cut_size_for(const LowerBoundGraph& lbg, std::size_t ell) {
  return lbg.base.n_edges() + (ell - 4) * lbg.base.n_b();
}

}  // namespace

DisjInstance::DisjInstance(std::vector<bool> x_bits, std::vector<bool> y_bits)
    : x(std::move(x_bits)), y(std::move(y_bits)) {
  if (x.empty() || x.size() != y.size()) {
    throw InvalidParameter("DisjInstance: x and y must be non-empty and of equal length");
  }
}

DisjInstance DisjInstance::from_strings(const std::string& x_bits, const std::string& y_bits) {
  return DisjInstance(parse_bits(x_bits), parse_bits(y_bits));
}

bool disj(const DisjInstance& inst) {
  for (std::size_t i = 0; i < inst.k(); ++i) {
    if (inst.x[i] && inst.y[i]) {
      return true;
    }
  }
  return false;
}

std::string bits_to_string(const std::vector<bool>& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) {
    out.push_back(b ? '1' : '0');
  }
  return out;
}

PartitionedGraph::PartitionedGraph(Graph graph, const VertexSet& side_a)
    : graph_(std::move(graph)), side_a_(side_a), on_a_(graph_.n_vertices(), false) {
  for (VertexId v : side_a_) {
    if (v >= graph_.n_vertices()) {
      throw InvalidParameter("PartitionedGraph: side-A vertex " + std::to_string(v) + " out of range");
    }
    on_a_[v] = true;
  }
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < graph_.n_vertices(); ++v) {
    if (!on_a_[v]) {
      rest.push_back(v);
    }
  }
  side_b_ = VertexSet(std::move(rest));
  for (const Edge& e : graph_.edges()) {
    if (on_a_[e.u] && on_a_[e.v]) {
      edges_a_.push_back(e);
    } else if (!on_a_[e.u] && !on_a_[e.v]) {
      edges_b_.push_back(e);
    } else {
      cut_.push_back(e);
    }
  }
}

PartitionedGraph build_instance(const LowerBoundGraph& lbg, const DisjInstance& inst, std::size_t ell) {
  if (inst.k() != lbg.designated.size()) {
    throw InvalidParameter("build_instance: instance has k=" + std::to_string(inst.k()) + " but the family has " +
                           std::to_string(lbg.designated.size()) + " sets");
  }
  if (ell < 4) {
    throw InvalidParameter("build_instance: ell must be >= 4");
  }
  const auto n_a = static_cast<VertexId>(lbg.base.n_a());
  const auto n_b = static_cast<VertexId>(lbg.base.n_b());
  const auto fresh = static_cast<VertexId>(ell - 4);
  const VertexId b_offset = n_a;
  const VertexId fresh_offset = n_a + n_b;

  std::vector<Edge> edges;
  for (const auto& [a, b] : lbg.base.edges()) {
    edges.push_back({a, b_offset + b});
  }
  for (std::size_t i = 0; i < inst.k(); ++i) {
    const Biclique& k = lbg.designated[i];
    if (inst.x[i]) {
      edges.push_back(Edge::canonical(k.a1, k.a2));
    }
    if (inst.y[i]) {
      edges.push_back(Edge::canonical(b_offset + k.b1, b_offset + k.b2));
    }
  }
  for (VertexId t = 0; t < fresh; ++t) {
    for (VertexId s = t + 1; s < fresh; ++s) {
      edges.push_back({fresh_offset + t, fresh_offset + s});
    }
    for (VertexId v = 0; v < n_a + n_b; ++v) {
      edges.push_back({v, fresh_offset + t});
    }
  }

  std::vector<VertexId> side_a;
  for (VertexId v = 0; v < n_a; ++v) {
    side_a.push_back(v);
  }
  for (VertexId t = 0; t < fresh; ++t) {
    side_a.push_back(fresh_offset + t);
  }
  return PartitionedGraph(Graph(fresh_offset + fresh, edges), VertexSet(std::move(side_a)));
}

ReductionReport check_reduction(const LowerBoundGraph& lbg, std::size_t ell, const CheckMode& mode,
                                unsigned threads) {
  if (ell < 4) {
    throw InvalidParameter("check_reduction: ell must be >= 4");
  }
  const std::size_t k = lbg.designated.size();
  if (k == 0) {
    throw InvalidParameter("check_reduction: the designated family is empty");
  }

  std::size_t total = 0;
  std::vector<DisjInstance> sampled_instances;
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (k > kExhaustiveMaxK) {
      throw InvalidParameter("check_reduction: exhaustive mode needs k <= 10 (got " + std::to_string(k) +
                             "); use sampled mode");
    }
    total = std::size_t{1} << (2 * k);
  } else {
    const auto& sampled = std::get<Sampled>(mode);
    Rng rng(sampled.seed);
    sampled_instances.reserve(sampled.count);
    for (std::size_t s = 0; s < sampled.count; ++s) {
      std::vector<bool> x(k);
      std::vector<bool> y(k);
      for (std::size_t i = 0; i < k; ++i) {
        x[i] = rng.coin();
      }
      for (std::size_t i = 0; i < k; ++i) {
        y[i] = rng.coin();
      }
      sampled_instances.emplace_back(std::move(x), std::move(y));
    }
    total = sampled_instances.size();
  }

  // Exhaustive instances are materialised on demand: x-mask major, y-mask minor.
  auto instance_at = [&](std::size_t i) {
    if (!sampled_instances.empty()) {
      return sampled_instances[i];
    }
    return DisjInstance(bits_from_mask(i >> k, k), bits_from_mask(i & ((std::size_t{1} << k) - 1), k));
  };

  std::vector<char> disj_value(total, 0);
  std::vector<char> found(total, 0);
  parallel_for(total, threads, [&](std::size_t i) {
    const DisjInstance inst = instance_at(i);
    disj_value[i] = disj(inst) ? 1 : 0;
    found[i] = contains_clique(build_instance(lbg, inst, ell).graph(), ell) ? 1 : 0;
  });

  ReductionReport report;
  report.instances_checked = total;
  report.cut_size = cut_size_for(lbg, ell);
  for (std::size_t i = 0; i < total; ++i) {
    if (disj_value[i] != found[i]) {
      const DisjInstance inst = instance_at(i);
      report.mismatches.push_back({bits_to_string(inst.x), bits_to_string(inst.y), disj_value[i] != 0, found[i] != 0});
    }
  }
  report.passed = report.mismatches.empty();
  return report;
}

std::uint64_t cut_traffic_bound(const LowerBoundGraph& lbg, std::size_t ell, std::uint64_t rounds,
                                std::uint64_t bandwidth) {
  if (ell < 4) {
    throw InvalidParameter("cut_traffic_bound: ell must be >= 4");
  }
  return rounds * cut_size_for(lbg, ell) * bandwidth;
}

}  // namespace cliquelb
