#include "cliquelb/congest.hpp"
#include "cliquelb/lbgraph.hpp"
#include "cliquelb/report_json.hpp"

#include <doctest.h>

using namespace cliquelb;

TEST_CASE("verification report JSON") {
  VerificationReport r;
  r.item3_violations = {{0, 1}, {1, 0}};
  const Json j = to_json(r);
  // indices are reported 1-based
  CHECK(j["item3"]["violations"].dump() == "[[1,2],[2,1]]");
  CHECK_FALSE(j["item3"]["ok"].get<bool>());
  CHECK(to_json(verify_lower_bound_graph(example_lower_bound_graph(), 12)).dump() ==
        R"({"passed":true,"k_value":4,"item1":{"edge_count":12,"m_bound":12,"ok":true},)"
        R"("item2":{"union_ok":true,"all_k22":true},"item3":{"violations":[],"ok":true},)"
        R"("item4":{"ha_bipartite":true,"hb_bipartite":true}})");
}

TEST_CASE("congest JSON without a partition") {
  const Graph g = example_lower_bound_graph().base.to_graph();
  const SimulationTrace t = run_folklore_detection(CongestNetwork(g, 3), 4);
  const Json j = congest_json(t, std::nullopt);
  CHECK_FALSE(j.contains("cut_bits"));
  CHECK(j["bound_r_m_b"].get<std::uint64_t>() == t.rounds_used * 12 * 3);
  CHECK(j["detecting_nodes"].empty());
}

TEST_CASE("ledger JSON keeps phase order") {
  BitLedger ledger;
  ledger.record("b", Direction::BobToAlice, 3);
  ledger.record("a", Direction::AliceToBob, 0);
  const Json j = to_json(ledger);
  CHECK(j.dump().find("\"b\"") < j.dump().find("\"a\""));
}
