#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "netdec/network.hpp"

// Internal machinery shared by the cut enumerator and the potential sampler.

namespace netdec::internal {

/// Condensation of a closure relation on vertices: blocks in reverse
/// topological order, plus deduplicated successor lists between blocks.
struct BlockDag {
  std::vector<std::vector<VertexId>> blocks;
  std::vector<int> block_of;
  std::vector<std::vector<int>> succ;
  int source_block = -1;
  int sink_block = -1;
};

BlockDag make_block_dag(const Network& net,
                        const std::vector<std::vector<VertexId>>& blocks,
                        const std::vector<std::pair<VertexId, VertexId>>& arcs);

/// Emits every vertex set that contains the source, excludes the sink, and
/// is closed under the dag's arcs (no arc leaves the set). Each set is
/// emitted exactly once as a vertex mask, depth-first with the exclusion
/// branch first, so the smallest (reachability closure of the source) comes
/// first and the largest last. Emission stops after `limit` sets or when
/// `emit` returns false; the return value is true iff every closed set was
/// emitted.
bool enumerate_closed_sets(const Network& net, const BlockDag& dag,
                           std::size_t limit,
                           const std::function<bool(const std::vector<char>&)>& emit);

}  // namespace netdec::internal
