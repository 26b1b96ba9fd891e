#include "cliquelb/congest.hpp"

#include <algorithm>

namespace cliquelb {

namespace {

using Bits = std::vector<bool>;

Bits serialize_ids(const std::vector<VertexId>& ids, std::uint32_t width) {
  Bits out;
  out.reserve(ids.size() * width);
  for (VertexId id : ids) {
    for (std::uint32_t bit = width; bit-- > 0;) {
      out.push_back(((id >> bit) & 1U) != 0);
    }
  }
  return out;
}

std::vector<VertexId> deserialize_ids(const Bits& bits, std::uint32_t width) {
  std::vector<VertexId> ids;
  for (std::size_t pos = 0; pos + width <= bits.size(); pos += width) {
    VertexId id = 0;
    for (std::uint32_t i = 0; i < width; ++i) {
      id = (id << 1) | (bits[pos + i] ? 1U : 0U);
    }
    ids.push_back(id);
  }
  return ids;
}

/// Per-node state: the outgoing stream and what arrived from each neighbour.
struct Node {
  std::vector<VertexId> neighbours;
  Bits stream;
  std::size_t sent = 0;
  std::vector<Bits> inbox;  // indexed like `neighbours`
};

}  // namespace

std::uint32_t id_width_for(std::size_t n_vertices) {
  std::uint32_t width = 0;
  while ((std::size_t{1} << width) < n_vertices) {
    ++width;
  }
  return std::max<std::uint32_t>(width, 1);
}

CongestNetwork::CongestNetwork(Graph graph, std::uint64_t bandwidth)
    : topology(std::move(graph)), bandwidth_b(bandwidth), id_width(id_width_for(topology.n_vertices())) {
  if (bandwidth_b < 1) {
    throw InvalidParameter("CongestNetwork: bandwidth must be >= 1");
  }
}

bool SimulationTrace::any_detection() const {
  return std::find(detections.begin(), detections.end(), true) != detections.end();
}

std::vector<VertexId> SimulationTrace::detecting_nodes() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < detections.size(); ++v) {
    if (detections[v]) {
      out.push_back(v);
    }
  }
  return out;
}

SimulationTrace run_folklore_detection(const CongestNetwork& net, std::size_t ell) {
  if (ell < 3) {
    throw InvalidParameter("run_folklore_detection: ell must be >= 3");
  }
  if (net.bandwidth_b < 1 || net.id_width < 1) {
    throw InvalidParameter("run_folklore_detection: bandwidth and id width must be >= 1");
  }
  const Graph& g = net.topology;
  const std::size_t n = g.n_vertices();

  std::vector<Node> nodes(n);
  for (VertexId v = 0; v < n; ++v) {
    nodes[v].neighbours = g.neighbor_list(v);
    nodes[v].stream = serialize_ids(nodes[v].neighbours, net.id_width);
    nodes[v].inbox.resize(nodes[v].neighbours.size());
  }
  // slot_of[v][u] position of u in v's neighbour list
  auto slot_of = [&](VertexId v, VertexId u) {
    const auto& nb = nodes[v].neighbours;
    return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), u) - nb.begin());
  };

  SimulationTrace trace;
  trace.topology = g;
  trace.bandwidth_b = net.bandwidth_b;
  trace.id_width = net.id_width;

  struct Delivery {
    VertexId to;
    std::size_t slot;
    Bits payload;
  };

  for (std::uint64_t round = 0;; ++round) {
    std::vector<Delivery> in_flight;
    for (VertexId u = 0; u < n; ++u) {
      Node& node = nodes[u];
      if (node.sent >= node.stream.size()) {
        continue;
      }
      const std::size_t len = std::min<std::size_t>(net.bandwidth_b, node.stream.size() - node.sent);
      const Bits chunk(node.stream.begin() + static_cast<std::ptrdiff_t>(node.sent),
                       node.stream.begin() + static_cast<std::ptrdiff_t>(node.sent + len));
      node.sent += len;
      for (VertexId v : node.neighbours) {
        trace.messages.push_back({round, u, v, len});
        in_flight.push_back({v, slot_of(v, u), chunk});
      }
    }
    if (in_flight.empty()) {
      trace.rounds_used = round;
      break;
    }
    for (Delivery& d : in_flight) {
      Bits& box = nodes[d.to].inbox[d.slot];
      box.insert(box.end(), d.payload.begin(), d.payload.end());
    }
  }

  trace.detections.assign(n, false);
  for (VertexId v = 0; v < n; ++v) {
    const Node& node = nodes[v];
    if (node.neighbours.size() + 1 < ell) {
      continue;
    }
    // Edges v knows: its own, plus each neighbour's edges back into N(v).
    const VertexSet closed_nbhd = [&] {
      std::vector<VertexId> ids = node.neighbours;
      ids.push_back(v);
      return VertexSet(std::move(ids));
    }();
    std::vector<Edge> known;
    for (std::size_t i = 0; i < node.neighbours.size(); ++i) {
      const VertexId u = node.neighbours[i];
      known.push_back(Edge::canonical(v, u));
      for (VertexId w : deserialize_ids(node.inbox[i], net.id_width)) {
        if (w != u && closed_nbhd.contains(w)) {
          known.push_back(Edge::canonical(u, w));
        }
      }
    }
    const Graph local = Graph(n, known).induced(VertexSet(node.neighbours));
    trace.detections[v] = contains_clique(local, ell - 1);
  }
  return trace;
}

std::uint64_t measure_cut_traffic(const SimulationTrace& trace, const PartitionedGraph& pg) {
  if (!(trace.topology == pg.graph())) {
    throw InvalidParameter("measure_cut_traffic: partitioned graph does not match the simulated topology");
  }
  std::uint64_t bits = 0;
  for (const WireMessage& m : trace.messages) {
    if (pg.on_side_a(m.from) != pg.on_side_a(m.to)) {
      bits += m.bits;
    }
  }
  return bits;
}

}  // namespace cliquelb
