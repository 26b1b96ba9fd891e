#pragma once

// JSON renderings of the structured reports. Key order is fixed by the
// ordered_json type so repeated runs print byte-identical output.

#include "cliquelb/congest.hpp"
#include "cliquelb/lbgraph.hpp"
#include "cliquelb/reduction.hpp"
#include "cliquelb/twoparty.hpp"

#include <json.hpp>

#include <optional>

namespace cliquelb {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const VertexSet& s);
[[nodiscard]] Json to_json(const VerificationReport& report);
[[nodiscard]] Json to_json(const ConstructionStats& stats);
[[nodiscard]] Json to_json(const ReductionReport& report);
[[nodiscard]] Json to_json(const BitLedger& ledger);

/// Protocol summary as printed by the `protocol` command.
[[nodiscard]] Json protocol_json(const PartitionedGraph& pg, const ProtocolResult& result,
                                 const ProtocolVerdict& verdict);

/// Simulation summary as printed by the `congest` command. bound_r_m_b is
/// rounds_used * |C| * b when a partition is given, otherwise rounds_used * |E| * b.
[[nodiscard]] Json congest_json(const SimulationTrace& trace, const std::optional<PartitionedGraph>& pg);

}  // namespace cliquelb
