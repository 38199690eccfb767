#include <doctest.h>

#include <queue>
#include <set>

#include "netdec/maxflow.hpp"
#include "netdec/oracle.hpp"
#include "test_networks.hpp"

using namespace netdec;

namespace {

bool residual_path_exists(const Network& net, const Flow& flow) {
  std::vector<std::vector<VertexId>> adj(net.vertex_count());
  for (const ResidualArc& arc : residual_arcs(net, flow)) {
    adj[arc.from].push_back(arc.to);
  }
  std::vector<char> seen(net.vertex_count(), 0);
  std::queue<VertexId> queue;
  seen[net.source()] = 1;
  queue.push(net.source());
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    if (v == net.sink()) return true;
    for (VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push(w);
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("max_flow on the named fixtures") {
  CHECK(max_flow(testnets::single_edge(5)).value == 5);
  CHECK(max_flow(testnets::diamond()).value == 2);

  const Network net = testnets::dangling();
  const MaxFlowResult result = max_flow(net);
  CHECK(result.value == 1);
  CHECK(result.flow.on(2) == 0);  // conservation at the dangling vertex
}

TEST_CASE("max_flow leaves no residual source-sink path and is deterministic") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Network net = testnets::random_network(seed, seed % 3 != 2);
    const MaxFlowResult first = max_flow(net);
    CHECK(first.value == flow_value(first.flow));
    CHECK(first.value >= 0);
    CHECK_FALSE(residual_path_exists(net, first.flow));
    CHECK(max_flow(net).flow.values() == first.flow.values());
  }
}

TEST_CASE("max_flow value matches the brute-force minimum cut") {
  for (std::uint64_t seed = 40; seed < 70; ++seed) {
    const Network net = testnets::random_network(seed, seed % 2 == 0);
    const OracleReport report = classify_by_enumeration(net);
    CHECK(max_flow(net).value == report.min_cut_capacity);
  }
}

TEST_CASE("augment_cycle pushes one unit around the n3 dummy pair") {
  const Network net = testnets::n3();
  const MaxFlowResult result = max_flow(net);
  REQUIRE(result.value == 2);
  REQUIRE(result.flow.on(4) == 0);
  REQUIRE(result.flow.on(5) == 0);

  const std::vector<ResidualArc> cycle{{1, 2, 4, ArcDir::Forward},
                                       {2, 1, 5, ArcDir::Forward}};
  const Flow augmented = augment_cycle(result.flow, cycle, 1);
  CHECK(flow_value(augmented) == 2);
  CHECK(augmented.on(4) == 1);
  CHECK(augmented.on(5) == 1);
  CHECK(validate_flow(net, augmented.values()).ok());
}

TEST_CASE("augment_cycle rejects bad inputs") {
  const Network net = testnets::n3();
  const MaxFlowResult result = max_flow(net);
  const std::vector<ResidualArc> cycle{{1, 2, 4, ArcDir::Forward},
                                       {2, 1, 5, ArcDir::Forward}};

  SUBCASE("zero amount") {
    CHECK_THROWS_AS(augment_cycle(result.flow, cycle, 0), std::invalid_argument);
  }
  SUBCASE("empty arc list") {
    CHECK_THROWS_AS(augment_cycle(result.flow, {}, 1), std::invalid_argument);
  }
  SUBCASE("amount beyond residual capacity") {
    CHECK_THROWS_AS(augment_cycle(result.flow, cycle, 2), std::invalid_argument);
  }
  SUBCASE("cycle through a saturated forward arc") {
    // Edge 0 (source->a) is saturated, so its forward arc has residual 0.
    const std::vector<ResidualArc> bad{{0, 1, 0, ArcDir::Forward},
                                       {1, 0, 0, ArcDir::Backward}};
    CHECK_THROWS_AS(augment_cycle(result.flow, bad, 1), std::invalid_argument);
  }
  SUBCASE("arcs that do not close") {
    const std::vector<ResidualArc> open{{1, 2, 4, ArcDir::Forward}};
    CHECK_THROWS_AS(augment_cycle(result.flow, open, 1), std::invalid_argument);
  }
  SUBCASE("arc inconsistent with its origin edge") {
    const std::vector<ResidualArc> lying{{2, 1, 4, ArcDir::Forward},
                                         {1, 2, 5, ArcDir::Forward}};
    CHECK_THROWS_AS(augment_cycle(result.flow, lying, 1), std::invalid_argument);
  }
}

TEST_CASE("augment_cycle preserves the flow value") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Network net = testnets::random_network(seed, true);
    const std::vector<Flow> flows = enumerate_max_flows(net, 4);
    for (size_t i = 1; i < flows.size(); ++i) {
      CHECK(flow_value(flows[i]) == flow_value(flows[0]));
    }
  }
}

TEST_CASE("enumerate_max_flows on the named fixtures") {
  CHECK(enumerate_max_flows(testnets::single_edge(5), 10).size() == 1);
  CHECK(enumerate_max_flows(testnets::diamond(), 10).size() == 1);

  // n3 has exactly two integral maximum flows: circulation off and on.
  const std::vector<Flow> flows = enumerate_max_flows(testnets::n3(), 10);
  CHECK(flows.size() == 2);
}

TEST_CASE("enumerate_max_flows is exhaustive under the limit") {
  for (std::uint64_t seed = 70; seed < 90; ++seed) {
    const Network net = testnets::random_network(seed, seed % 2 == 1);
    if (testnets::flow_space(net) > 100'000) continue;

    // Independent count: brute-force integral flows at maximum value.
    const std::int64_t best = max_flow(net).value;
    std::size_t max_flow_count = 0;
    enumerate_integral_flows(net, [&](const std::vector<std::int64_t>& values) {
      if (flow_value(Flow(net, values)) == best) ++max_flow_count;
    });

    const std::vector<Flow> flows = enumerate_max_flows(net, 1 << 14);
    CHECK(flows.size() == max_flow_count);
    std::set<std::vector<std::int64_t>> distinct;
    for (const Flow& flow : flows) {
      CHECK(flow_value(flow) == best);
      CHECK(validate_flow(net, flow.values()).ok());
      CHECK(distinct.insert(flow.values()).second);
    }
    // The deterministic solver flow always opens the list.
    CHECK(flows.front().values() == max_flow(net).flow.values());
  }
}
