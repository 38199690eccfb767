#pragma once

#include <cstddef>
#include <vector>

#include "netdec/network.hpp"

namespace netdec {

struct MaxFlowResult {
  Flow flow;
  std::int64_t value;
};

/// Exact maximum flow via the level-graph blocking-flow method. Fully
/// deterministic: adjacency is scanned in edge-id order with the forward arc
/// of an edge before its backward arc, so repeated runs return the same flow
/// vector byte for byte.
MaxFlowResult max_flow(const Network& net);

/// Pushes `amount` units around a directed cycle of residual arcs and
/// returns the resulting flow; the flow value is unchanged. The arc list
/// must form a simple directed cycle of genuine residual arcs of `flow`,
/// each with residual capacity >= amount >= 1; anything else is rejected
/// with std::invalid_argument.
Flow augment_cycle(const Flow& flow, const std::vector<ResidualArc>& cycle,
                   std::int64_t amount);

/// Up to `limit` pairwise-distinct maximum flows, starting from
/// max_flow(net) and exploring unit pushes around simple residual cycles in
/// breadth-first order. Exhaustive whenever the instance has at most `limit`
/// integral maximum flows. Exponential in the worst case; intended as a
/// test-support generator at desk scale.
std::vector<Flow> enumerate_max_flows(const Network& net, std::size_t limit);

}  // namespace netdec
