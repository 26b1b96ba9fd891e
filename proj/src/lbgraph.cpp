#include "cliquelb/lbgraph.hpp"

#include "cliquelb/parallel.hpp"
#include "cliquelb/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace cliquelb {

namespace {

constexpr auto npos = Bitset::npos;

std::uint64_t pair_key(VertexId lo, VertexId hi) { return (std::uint64_t{lo} << 32) | hi; }

std::size_t choose2(std::size_t c) { return c < 2 ? 0 : c * (c - 1) / 2; }

std::vector<VertexPair> sorted_unique(std::vector<VertexPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

/// Number of K_{2,2} containing the pair with the given common neighbourhood.
std::size_t multiplicity(const Bitset& common) { return choose2(common.count()); }

template <class Fn>
void for_each_pair(const Bitset& bits, Fn&& fn) {
  for (auto x = bits.find_first(); x != npos; x = bits.find_next(x)) {
    for (auto y = bits.find_next(x); y != npos; y = bits.find_next(y)) {
      fn(static_cast<VertexId>(x), static_cast<VertexId>(y));
    }
  }
}

std::size_t count_pairs_over_threshold(const std::vector<Bitset>& rows) {
  std::size_t over = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (multiplicity(rows[i] & rows[j]) > kPairMultiplicityLimit) {
        ++over;
      }
    }
  }
  return over;
}

StatSummary summarise(const std::vector<double>& values) {
  StatSummary s;
  if (values.empty()) {
    return s;
  }
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

bool in_range(const Biclique& k, std::size_t n_a, std::size_t n_b) {
  return k.a1 < n_a && k.a2 < n_a && k.b1 < n_b && k.b2 < n_b;
}

}  // namespace

std::vector<VertexPair> LowerBoundGraph::ha_edges() const {
  std::vector<VertexPair> out;
  out.reserve(designated.size());
  for (const auto& k : designated) {
    out.emplace_back(std::min(k.a1, k.a2), std::max(k.a1, k.a2));
  }
  return sorted_unique(std::move(out));
}

std::vector<VertexPair> LowerBoundGraph::hb_edges() const {
  std::vector<VertexPair> out;
  out.reserve(designated.size());
  for (const auto& k : designated) {
    out.emplace_back(std::min(k.b1, k.b2), std::max(k.b1, k.b2));
  }
  return sorted_unique(std::move(out));
}

BipartiteGraph generate_random_bipartite(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2) {
    throw InvalidParameter("generate_random_bipartite: n must be >= 2, got " + std::to_string(n));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameter("generate_random_bipartite: p must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<VertexPair> edges;
  edges.reserve(static_cast<std::size_t>(static_cast<double>(n * n) * p * 1.2) + 16);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (rng.uniform01() < p) {
        edges.emplace_back(a, b);
      }
    }
  }
  return BipartiteGraph(n, n, edges);
}

SideSamples sample_sides(std::size_t n_a, std::size_t n_b, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  for (VertexId v = 0; v < n_a; ++v) {
    if (rng.coin()) {
      a.push_back(v);
    }
  }
  for (VertexId v = 0; v < n_b; ++v) {
    if (rng.coin()) {
      b.push_back(v);
    }
  }
  return {VertexSet(std::move(a)), VertexSet(std::move(b))};
}

PeelOutcome peel_with_samples(const BipartiteGraph& g, const SideSamples& samples) {
  if (g.n_a() == 0 || g.n_b() == 0) {
    throw InvalidParameter("peel: graph has an empty side");
  }
  const std::vector<Biclique> all = enumerate_k22(g);

  std::vector<bool> in_a_sample(g.n_a(), false);
  std::vector<bool> in_b_sample(g.n_b(), false);
  for (VertexId v : samples.a) {
    if (v < g.n_a()) {
      in_a_sample[v] = true;
    }
  }
  for (VertexId v : samples.b) {
    if (v < g.n_b()) {
      in_b_sample[v] = true;
    }
  }

  PeelOutcome out;
  out.k_total = all.size();

  std::unordered_set<std::uint64_t> forbidden_a;
  std::unordered_set<std::uint64_t> forbidden_b;
  std::vector<Biclique> accepted;
  std::set<VertexPair> h_edges;

  // Multiplicities always refer to the unpeeled family, so they are fixed
  // for the whole loop.
  for (const Biclique& k : all) {
    const Bitset common_b = g.a_row(k.a1) & g.a_row(k.a2);
    const Bitset common_a = g.b_row(k.b1) & g.b_row(k.b2);
    if (multiplicity(common_b) > kPairMultiplicityLimit || multiplicity(common_a) > kPairMultiplicityLimit) {
      continue;
    }
    if (in_a_sample[k.a1] == in_a_sample[k.a2] || in_b_sample[k.b1] == in_b_sample[k.b2]) {
      continue;
    }
    if (forbidden_a.contains(pair_key(k.a1, k.a2)) || forbidden_b.contains(pair_key(k.b1, k.b2))) {
      continue;
    }

    accepted.push_back(k);
    for (VertexId a : {k.a1, k.a2}) {
      for (VertexId b : {k.b1, k.b2}) {
        h_edges.emplace(a, b);
      }
    }

    std::size_t added_b = 0;
    for_each_pair(common_b, [&](VertexId b3, VertexId b4) {
      forbidden_b.insert(pair_key(b3, b4));
      ++added_b;
    });
    std::size_t added_a = 0;
    for_each_pair(common_a, [&](VertexId a3, VertexId a4) {
      forbidden_a.insert(pair_key(a3, a4));
      ++added_a;
    });
    out.max_forbid_a_per_accept = std::max(out.max_forbid_a_per_accept, added_a);
    out.max_forbid_b_per_accept = std::max(out.max_forbid_b_per_accept, added_b);
  }

  std::vector<Bitset> a_rows;
  std::vector<Bitset> b_rows;
  a_rows.reserve(g.n_a());
  b_rows.reserve(g.n_b());
  for (VertexId a = 0; a < g.n_a(); ++a) {
    a_rows.push_back(g.a_row(a));
  }
  for (VertexId b = 0; b < g.n_b(); ++b) {
    b_rows.push_back(g.b_row(b));
  }
  out.pairs_over_threshold_a = count_pairs_over_threshold(a_rows);
  out.pairs_over_threshold_b = count_pairs_over_threshold(b_rows);

  const std::vector<VertexPair> edge_list(h_edges.begin(), h_edges.end());
  out.graph.base = BipartiteGraph(g.n_a(), g.n_b(), edge_list);
  out.graph.designated = std::move(accepted);
  out.graph.side_sample_a = samples.a;
  out.graph.side_sample_b = samples.b;
  return out;
}

LowerBoundGraph peel(const BipartiteGraph& g, std::uint64_t seed) {
  return peel_with_samples(g, sample_sides(g.n_a(), g.n_b(), seed)).graph;
}

double expected_k22_count(std::size_t n) {
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  // p^4 = 1/n^2
  return pairs * pairs / (static_cast<double>(n) * static_cast<double>(n));
}

ConstructionResult construct_lower_bound_graph(std::size_t n, std::uint64_t seed) {
  if (n < 4) {
    throw InvalidParameter("construct_lower_bound_graph: n must be >= 4, got " + std::to_string(n));
  }
  const double p = 1.0 / std::sqrt(static_cast<double>(n));
  const BipartiteGraph random_graph = generate_random_bipartite(n, p, derive_seed(seed, "edges"));
  PeelOutcome peeled = peel_with_samples(random_graph, sample_sides(n, n, derive_seed(seed, "sample")));

  ConstructionResult result;
  result.stats.k_total = peeled.k_total;
  result.stats.pairs_over_threshold_a = peeled.pairs_over_threshold_a;
  result.stats.pairs_over_threshold_b = peeled.pairs_over_threshold_b;
  result.stats.h_size = peeled.graph.designated.size();
  result.stats.edge_count = peeled.graph.base.n_edges();
  result.stats.random_edge_count = random_graph.n_edges();
  result.stats.expected_k = expected_k22_count(n);
  result.graph = std::move(peeled.graph);
  return result;
}

VerificationReport verify_lower_bound_graph(const LowerBoundGraph& lbg, std::size_t m_bound) {
  const BipartiteGraph& g = lbg.base;
  VerificationReport report;
  report.edge_count = g.n_edges();
  report.m_bound = m_bound;
  report.item1_ok = report.edge_count <= m_bound;
  report.k_value = lbg.designated.size();

  // Item 2
  bool all_in_range = true;
  report.item2_all_k22 = true;
  std::set<VertexPair> union_edges;
  for (const Biclique& k : lbg.designated) {
    if (!in_range(k, g.n_a(), g.n_b())) {
      all_in_range = false;
      report.item2_all_k22 = false;
      continue;
    }
    if (k.a1 == k.a2 || k.b1 == k.b2) {
      report.item2_all_k22 = false;
    }
    for (VertexId a : {k.a1, k.a2}) {
      for (VertexId b : {k.b1, k.b2}) {
        union_edges.insert({a, b});
        if (!g.has_edge(a, b)) {
          report.item2_all_k22 = false;
        }
      }
    }
  }
  report.item2_union_ok = std::equal(union_edges.begin(), union_edges.end(), g.edges().begin(), g.edges().end());

  // Item 3: only B-pairs inside the common neighbourhood of A(E_i) can close a K_{2,2}.
  if (all_in_range) {
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_b_pair;
    for (std::size_t j = 0; j < lbg.designated.size(); ++j) {
      const Biclique& k = lbg.designated[j];
      by_b_pair[pair_key(std::min(k.b1, k.b2), std::max(k.b1, k.b2))].push_back(j);
    }
    for (std::size_t i = 0; i < lbg.designated.size(); ++i) {
      const Biclique& k = lbg.designated[i];
      if (k.a1 == k.a2) {
        continue;
      }
      const Bitset common = g.a_row(k.a1) & g.a_row(k.a2);
      for_each_pair(common, [&](VertexId b1, VertexId b2) {
        const auto it = by_b_pair.find(pair_key(b1, b2));
        if (it == by_b_pair.end()) {
          return;
        }
        for (std::size_t j : it->second) {
          if (j != i) {
            report.item3_violations.emplace_back(i, j);
          }
        }
      });
    }
    std::sort(report.item3_violations.begin(), report.item3_violations.end());
  }

  // Item 4
  if (all_in_range) {
    const auto ha = lbg.ha_edges();
    const auto hb = lbg.hb_edges();
    const bool a_loop = std::any_of(ha.begin(), ha.end(), [](const VertexPair& e) { return e.first == e.second; });
    const bool b_loop = std::any_of(hb.begin(), hb.end(), [](const VertexPair& e) { return e.first == e.second; });
    report.item4_ha_bipartite = !a_loop && is_bipartite(graph_from_pairs(g.n_a(), ha)).has_value();
    report.item4_hb_bipartite = !b_loop && is_bipartite(graph_from_pairs(g.n_b(), hb)).has_value();
  }

  report.passed = report.item1_ok && report.item2_union_ok && report.item2_all_k22 &&
                  report.item3_violations.empty() && report.item4_ha_bipartite && report.item4_hb_bipartite;
  return report;
}

LemmaStatistics lemma_statistics(std::size_t n, std::span<const std::uint64_t> seeds, unsigned threads) {
  if (n < 16) {
    throw InvalidParameter("lemma_statistics: n must be >= 16");
  }
  if (seeds.size() < 5) {
    throw InvalidParameter("lemma_statistics: at least 5 seeds required, got " + std::to_string(seeds.size()));
  }
  LemmaStatistics out;
  out.n = n;
  out.expected_k = expected_k22_count(n);
  out.per_seed.resize(seeds.size());
  parallel_for(seeds.size(), threads, [&](std::size_t i) {
    out.per_seed[i] = {seeds[i], construct_lower_bound_graph(n, seeds[i]).stats};
  });

  auto column = [&](auto member) {
    std::vector<double> values;
    values.reserve(out.per_seed.size());
    for (const auto& [seed, stats] : out.per_seed) {
      values.push_back(static_cast<double>(stats.*member));
    }
    return summarise(values);
  };
  out.k_total = column(&ConstructionStats::k_total);
  out.pairs_over_threshold_a = column(&ConstructionStats::pairs_over_threshold_a);
  out.pairs_over_threshold_b = column(&ConstructionStats::pairs_over_threshold_b);
  out.h_size = column(&ConstructionStats::h_size);
  out.edge_count = column(&ConstructionStats::edge_count);
  return out;
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw InvalidParameter("loglog_slope: need at least two paired points");
  }
  const double count = static_cast<double>(xs.size());
  double sx = 0;
  double sy = 0;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0 || ys[i] <= 0) {
      throw InvalidParameter("loglog_slope: values must be positive");
    }
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = count * sxx - sx * sx;
  if (denom == 0) {
    throw InvalidParameter("loglog_slope: x values are all equal");
  }
  return (count * sxy - sx * sy) / denom;
}

LowerBoundGraph example_lower_bound_graph() {
  constexpr VertexId n = 4;
  std::vector<VertexPair> edges;
  for (VertexId i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + n - 1) % n);
    edges.emplace_back(i, i);
    edges.emplace_back(i, (i + 1) % n);
  }
  LowerBoundGraph lbg;
  lbg.base = BipartiteGraph(n, n, edges);
  for (VertexId i = 0; i < n; ++i) {
    const VertexId next = (i + 1) % n;
    lbg.designated.push_back({std::min(i, next), std::max(i, next), std::min(i, next), std::max(i, next)});
  }
  lbg.side_sample_a = VertexSet{0, 2};
  lbg.side_sample_b = VertexSet{0, 2};
  return lbg;
}

}  // namespace cliquelb
