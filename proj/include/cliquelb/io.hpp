#pragma once

// Text file formats.
//
//   graph:      "n m" then m lines "u v" (u < v)
//   bipartite:  "nA nB m" then m lines "a b"
//   lbg:        "LBG n k", a bipartite block, k lines "a1 a2 b1 b2",
//               then one line of A' ids and one line of B' ids
//   partition:  one line with the V_A ids

#include "cliquelb/graph.hpp"
#include "cliquelb/lbgraph.hpp"

#include <filesystem>
#include <iosfwd>

namespace cliquelb {

class FormatError : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

[[nodiscard]] Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

[[nodiscard]] BipartiteGraph read_bipartite(std::istream& in);
void write_bipartite(std::ostream& out, const BipartiteGraph& g);

[[nodiscard]] LowerBoundGraph read_lbg(std::istream& in);
void write_lbg(std::ostream& out, const LowerBoundGraph& lbg);

[[nodiscard]] VertexSet read_partition(std::istream& in);
void write_partition(std::ostream& out, const VertexSet& side_a);

[[nodiscard]] Graph load_graph(const std::filesystem::path& path);
[[nodiscard]] LowerBoundGraph load_lbg(const std::filesystem::path& path);
[[nodiscard]] VertexSet load_partition(const std::filesystem::path& path);

}  // namespace cliquelb
