#include "cliquelb/twoparty.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliquelb {

namespace {

std::vector<VertexSet> sorted_union(std::vector<VertexSet> a, const std::vector<VertexSet>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

ClassifiedVertices classify_from_cut(std::uint64_t n, const std::vector<bool>& on_a, const std::vector<Edge>& cut) {
  std::vector<std::uint64_t> degree(on_a.size(), 0);
  for (const Edge& e : cut) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<VertexId> low;
  std::vector<VertexId> high;
  for (VertexId v = 0; v < on_a.size(); ++v) {
    if (!on_a[v]) {
      continue;
    }
    (degree[v] * degree[v] <= n ? low : high).push_back(v);
  }
  return {VertexSet(std::move(low)), VertexSet(std::move(high))};
}

}  // namespace

const char* to_string(Direction d) { return d == Direction::AliceToBob ? "AliceToBob" : "BobToAlice"; }
const char* to_string(CutCase c) { return c == CutCase::LargeCut ? "LargeCut" : "SmallCut"; }

void BitLedger::record(std::string label, Direction direction, std::uint64_t bits) {
  phases_.push_back({std::move(label), direction, bits});
  total_ += bits;
}

std::uint64_t BitLedger::bits_with_prefix(const std::string& prefix) const {
  std::uint64_t sum = 0;
  for (const auto& phase : phases_) {
    if (phase.label.starts_with(prefix)) {
      sum += phase.bits;
    }
  }
  return sum;
}

void Channel::send(Role from, std::string label, BitString payload) {
  const Direction dir = from == Role::Alice ? Direction::AliceToBob : Direction::BobToAlice;
  ledger_.record(label, dir, payload.size());
  Message msg{std::move(label), dir, std::move(payload)};
  transcript_.push_back(msg);
  (from == Role::Alice ? to_bob_ : to_alice_).push_back(std::move(msg));
}

Message Channel::receive(Role to) {
  auto& queue = to == Role::Alice ? to_alice_ : to_bob_;
  if (queue.empty()) {
    throw std::logic_error("Channel::receive: no pending message");
  }
  Message msg = std::move(queue.front());
  queue.pop_front();
  return msg;
}

std::uint64_t ceil_sqrt(std::uint64_t x) {
  std::uint64_t r = 0;
  while (r * r < x) {
    ++r;
  }
  return r;
}

CutCase decide_case(std::uint64_t n_vertices, std::uint64_t cut_size) {
  return cut_size * cut_size >= n_vertices * n_vertices * n_vertices ? CutCase::LargeCut : CutCase::SmallCut;
}

ClassifiedVertices classify_vertices(const PartitionedGraph& pg) {
  std::vector<bool> on_a(pg.n_vertices());
  for (VertexId v = 0; v < pg.n_vertices(); ++v) {
    on_a[v] = pg.on_side_a(v);
  }
  return classify_from_cut(pg.n_vertices(), on_a, pg.cut_edges());
}

BitString encode_adjacency(const VertexSet& s, const Graph& g) {
  const auto& ids = s.members();
  BitString bits;
  bits.reserve(ids.size() * ids.size());
  for (VertexId row : ids) {
    for (VertexId col : ids) {
      bits.push_back(row != col && g.has_edge(row, col));
    }
  }
  return bits;
}

std::vector<Edge> decode_adjacency(const VertexSet& s, const BitString& bits) {
  const auto& ids = s.members();
  const std::size_t k = ids.size();
  if (bits.size() != k * k) {
    throw InvalidParameter("decode_adjacency: expected " + std::to_string(k * k) + " bits, got " +
                           std::to_string(bits.size()));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    if (bits[i * k + i]) {
      throw InvalidParameter("decode_adjacency: diagonal bit set");
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (bits[i * k + j] != bits[j * k + i]) {
        throw InvalidParameter("decode_adjacency: matrix is not symmetric");
      }
      if (bits[i * k + j]) {
        edges.push_back({ids[i], ids[j]});
      }
    }
  }
  return edges;
}

Party::Party(Role role, const PartitionedGraph& pg)
    : role_(role), n_(pg.n_vertices()), on_a_(pg.n_vertices()), cut_(pg.cut_edges()) {
  for (VertexId v = 0; v < n_; ++v) {
    on_a_[v] = pg.on_side_a(v);
  }
  known_ = role == Role::Alice ? pg.side_a_edges() : pg.side_b_edges();
  known_.insert(known_.end(), cut_.begin(), cut_.end());
}

CutCase Party::decide_case() const { return cliquelb::decide_case(n_, cut_.size()); }

ClassifiedVertices Party::classify() const { return classify_from_cut(n_, on_a_, cut_); }

std::vector<VertexSet> Party::local_cliques() const {
  // Without the other side's internal edges every clique here has at most
  // one vertex over there, and all of those are visible in full.
  return enumerate_cliques(knowledge(), 1);
}

VertexSet Party::cut_neighbours(VertexId v) const {
  std::vector<VertexId> out;
  for (const Edge& e : cut_) {
    if (e.u == v) {
      out.push_back(e.v);
    } else if (e.v == v) {
      out.push_back(e.u);
    }
  }
  return VertexSet(std::move(out));
}

BitString Party::encode(const VertexSet& s) const { return encode_adjacency(s, knowledge()); }

void Party::learn(const std::vector<Edge>& edges) { known_.insert(known_.end(), edges.begin(), edges.end()); }

Graph Party::knowledge() const { return Graph(n_, known_); }

ProtocolResult run_protocol(const PartitionedGraph& pg) {
  Party alice(Role::Alice, pg);
  Party bob(Role::Bob, pg);
  Channel channel;
  ProtocolResult result;

  const CutCase alice_case = alice.decide_case();
  const ClassifiedVertices alice_split = alice.classify();
  if (alice_case != bob.decide_case()) {
    throw std::logic_error("run_protocol: endpoints disagree on the case split");
  }
  result.case_taken = alice_case;
  result.low_degree_set = alice_split.low;
  result.high_degree_set = alice_split.high;

  std::vector<VertexSet> local = sorted_union(alice.local_cliques(), bob.local_cliques());

  if (alice_case == CutCase::LargeCut) {
    channel.send(Role::Alice, kLargeCutLabel, alice.encode(pg.side_a()));
    const Message msg = channel.receive(Role::Bob);
    bob.learn(decode_adjacency(pg.side_a(), msg.payload));
    result.bob_remote = enumerate_cliques(bob.knowledge(), 1);
  } else {
    const ClassifiedVertices bob_split = bob.classify();
    if (bob_split.low != alice_split.low || bob_split.high != alice_split.high) {
      throw std::logic_error("run_protocol: endpoints disagree on the vertex classification");
    }

    // Low-degree phase: Bob ships G_B[N(v) & V_B] for each low-degree v.
    for (VertexId v : bob_split.low) {
      channel.send(Role::Bob, kLowPhasePrefix + std::string("v") + std::to_string(v),
                   bob.encode(bob.cut_neighbours(v)));
    }
    for (VertexId v : alice_split.low) {
      const Message msg = channel.receive(Role::Alice);
      alice.learn(decode_adjacency(alice.cut_neighbours(v), msg.payload));
    }
    for (VertexSet& clique : enumerate_cliques(alice.knowledge(), 1)) {
      const bool has_low = std::any_of(clique.begin(), clique.end(),
                                       [&](VertexId v) { return alice_split.low.contains(v); });
      if (has_low) {
        result.alice_remote.push_back(std::move(clique));
      }
    }

    // High-degree phase: Alice ships G_A[V_high].
    channel.send(Role::Alice, kHighPhaseLabel, alice.encode(alice_split.high));
    const Message msg = channel.receive(Role::Bob);
    bob.learn(decode_adjacency(bob_split.high, msg.payload));
    for (VertexSet& clique : enumerate_cliques(bob.knowledge(), 1)) {
      std::size_t on_a = 0;
      bool all_high = true;
      for (VertexId v : clique) {
        if (pg.on_side_a(v)) {
          ++on_a;
          all_high = all_high && bob_split.high.contains(v);
        }
      }
      if (on_a >= 2 && all_high) {
        result.bob_remote.push_back(std::move(clique));
      }
    }
  }

  result.cliques = sorted_union(sorted_union(std::move(local), result.alice_remote), result.bob_remote);
  result.ledger = channel.ledger();
  result.transcript = channel.transcript();
  return result;
}

std::uint64_t protocol_budget(const PartitionedGraph& pg) {
  return 2 * ceil_sqrt(pg.n_vertices()) * pg.cut_edges().size();
}

ProtocolVerdict verify_protocol(const PartitionedGraph& pg, const ProtocolResult& result) {
  ProtocolVerdict verdict;
  verdict.ledger = result.ledger;
  std::vector<VertexSet> oracle = enumerate_cliques(pg.graph(), 1);
  std::sort(oracle.begin(), oracle.end());
  verdict.correct = result.cliques == oracle;
  const std::uint64_t total = result.ledger.total_bits();
  verdict.within_budget = pg.cut_edges().empty() ? total == 0 : total <= protocol_budget(pg);
  return verdict;
}

ProtocolVerdict verify_protocol(const PartitionedGraph& pg) { return verify_protocol(pg, run_protocol(pg)); }

}  // namespace cliquelb
