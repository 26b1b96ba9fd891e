#pragma once

// Two-party clique listing in the vertex partition model. Alice holds
// E_A and the cut, Bob holds E_B and the cut; every bit they exchange goes
// through a Channel and is charged to a BitLedger.

#include "cliquelb/graph.hpp"
#include "cliquelb/reduction.hpp"

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

namespace cliquelb {

using BitString = std::vector<bool>;

enum class Direction { AliceToBob, BobToAlice };
enum class CutCase { LargeCut, SmallCut };
enum class Role { Alice, Bob };

[[nodiscard]] const char* to_string(Direction d);
[[nodiscard]] const char* to_string(CutCase c);

struct PhaseRecord {
  std::string label;
  Direction direction = Direction::AliceToBob;
  std::uint64_t bits = 0;

  bool operator==(const PhaseRecord&) const = default;
};

class BitLedger {
 public:
  void record(std::string label, Direction direction, std::uint64_t bits);

  [[nodiscard]] const std::vector<PhaseRecord>& phases() const { return phases_; }
  [[nodiscard]] std::uint64_t total_bits() const { return total_; }
  /// Sum over phases whose label starts with `prefix`.
  [[nodiscard]] std::uint64_t bits_with_prefix(const std::string& prefix) const;

  bool operator==(const BitLedger&) const = default;

 private:
  std::vector<PhaseRecord> phases_;
  std::uint64_t total_ = 0;
};

struct Message {
  std::string label;
  Direction direction = Direction::AliceToBob;
  BitString payload;

  bool operator==(const Message&) const = default;
};

/// In-memory duplex link; the ledger is charged on send with the exact payload length.
class Channel {
 public:
  void send(Role from, std::string label, BitString payload);
  /// Next message addressed to `to`; throws std::logic_error if none is pending.
  [[nodiscard]] Message receive(Role to);

  [[nodiscard]] const BitLedger& ledger() const { return ledger_; }
  [[nodiscard]] const std::vector<Message>& transcript() const { return transcript_; }

 private:
  std::deque<Message> to_alice_;
  std::deque<Message> to_bob_;
  std::vector<Message> transcript_;
  BitLedger ledger_;
};

struct ClassifiedVertices {
  VertexSet low;
  VertexSet high;
};

/// ceil(sqrt(x)) in exact integer arithmetic.
[[nodiscard]] std::uint64_t ceil_sqrt(std::uint64_t x);

/// LargeCut iff |C|^2 >= n^3.
[[nodiscard]] CutCase decide_case(std::uint64_t n_vertices, std::uint64_t cut_size);

/// Splits V_A by d_v^2 <= n, where d_v counts cut edges at v and n = |V|.
[[nodiscard]] ClassifiedVertices classify_vertices(const PartitionedGraph& pg);

/// Row-major |s| x |s| adjacency matrix of g[s], rows in ascending id order.
[[nodiscard]] BitString encode_adjacency(const VertexSet& s, const Graph& g);
/// Inverse of encode_adjacency: edges of g[s] in original ids. Throws
/// InvalidParameter on a length mismatch, an asymmetric matrix or a set diagonal.
[[nodiscard]] std::vector<Edge> decode_adjacency(const VertexSet& s, const BitString& bits);

/// One endpoint of the protocol. Holds only what the vertex partition model
/// grants its role: its own side's edges, the cut and the vertex split.
class Party {
 public:
  Party(Role role, const PartitionedGraph& pg);

  [[nodiscard]] Role role() const { return role_; }
  [[nodiscard]] CutCase decide_case() const;
  [[nodiscard]] ClassifiedVertices classify() const;
  /// Cliques fully visible without communication.
  [[nodiscard]] std::vector<VertexSet> local_cliques() const;
  /// Cut neighbours of v on the other side.
  [[nodiscard]] VertexSet cut_neighbours(VertexId v) const;
  [[nodiscard]] BitString encode(const VertexSet& s) const;
  void learn(const std::vector<Edge>& edges);
  [[nodiscard]] Graph knowledge() const;

 private:
  Role role_;
  std::size_t n_;
  std::vector<bool> on_a_;
  std::vector<Edge> cut_;
  std::vector<Edge> known_;
};

struct ProtocolResult {
  std::vector<VertexSet> cliques;
  BitLedger ledger;
  CutCase case_taken = CutCase::SmallCut;
  VertexSet low_degree_set;
  VertexSet high_degree_set;
  /// Cliques listed after communication: by Alice in the low-degree phase,
  /// by Bob in the high-degree phase (or in the large-cut case).
  std::vector<VertexSet> alice_remote;
  std::vector<VertexSet> bob_remote;
  std::vector<Message> transcript;
};

[[nodiscard]] ProtocolResult run_protocol(const PartitionedGraph& pg);

/// 2 * ceil(sqrt(n)) * |C|.
[[nodiscard]] std::uint64_t protocol_budget(const PartitionedGraph& pg);

struct ProtocolVerdict {
  bool correct = false;
  bool within_budget = false;
  BitLedger ledger;
};

[[nodiscard]] ProtocolVerdict verify_protocol(const PartitionedGraph& pg);
[[nodiscard]] ProtocolVerdict verify_protocol(const PartitionedGraph& pg, const ProtocolResult& result);

/// Ledger labels.
inline constexpr const char* kLargeCutLabel = "case1/alice-side";
inline constexpr const char* kLowPhasePrefix = "2a/";
inline constexpr const char* kHighPhaseLabel = "2b/high-degree";

}  // namespace cliquelb
