#pragma once

// Round-synchronous CONGEST_b simulation of neighbourhood-broadcast clique
// detection.

#include "cliquelb/graph.hpp"
#include "cliquelb/reduction.hpp"

#include <cstdint>
#include <vector>

namespace cliquelb {

/// max(1, ceil(log2 n)).
[[nodiscard]] std::uint32_t id_width_for(std::size_t n_vertices);

struct CongestNetwork {
  Graph topology;
  std::uint64_t bandwidth_b = 1;
  std::uint32_t id_width = 1;

  /// Derives id_width from the vertex count.
  CongestNetwork(Graph graph, std::uint64_t bandwidth);
};

/// One directed transmission over an edge in one round.
struct WireMessage {
  std::uint64_t round = 0;
  VertexId from = 0;
  VertexId to = 0;
  std::uint64_t bits = 0;

  [[nodiscard]] Edge edge() const { return Edge::canonical(from, to); }
  bool operator==(const WireMessage&) const = default;
};

struct SimulationTrace {
  Graph topology;
  std::uint64_t bandwidth_b = 1;
  std::uint32_t id_width = 1;
  std::uint64_t rounds_used = 0;
  std::vector<WireMessage> messages;
  /// detections[v] is node v's output.
  std::vector<bool> detections;

  [[nodiscard]] bool any_detection() const;
  [[nodiscard]] std::vector<VertexId> detecting_nodes() const;
};

/// Every node streams its sorted neighbour ids (id_width bits each, MSB
/// first) to all neighbours, at most bandwidth_b bits per edge per round;
/// the last chunk of a stream is not padded. Afterwards node v outputs 1 iff
/// it lies in an ell-clique of the graph it learned on its closed neighbourhood.
[[nodiscard]] SimulationTrace run_folklore_detection(const CongestNetwork& net, std::size_t ell);

/// Bits carried by messages over cut edges of `pg`, whose graph must equal the trace topology.
[[nodiscard]] std::uint64_t measure_cut_traffic(const SimulationTrace& trace, const PartitionedGraph& pg);

}  // namespace cliquelb
