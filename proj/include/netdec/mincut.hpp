#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "netdec/network.hpp"

namespace netdec {

/// One minimum s-t cut, identified by its source side.
struct MinCut {
  std::vector<VertexId> source_side;  ///< sorted ascending
  std::vector<EdgeId> cut_edges;      ///< edges leaving the side, ascending
  std::vector<EdgeId> back_edges;     ///< edges entering the side, ascending
  std::int64_t capacity = 0;          ///< sum of capacities of cut_edges

  bool operator==(const MinCut&) const = default;
};

/// Under a maximum flow, a source side S gives a minimum cut exactly when S
/// contains the source, misses the sink, and no residual arc leaves S.
bool is_min_cut(const Network& net, const Flow& flow,
                const std::vector<VertexId>& source_side);

/// The unique inclusion-minimal source side: everything residual-reachable
/// from the source.
MinCut minimal_min_cut(const Network& net, const Flow& flow);

/// The unique inclusion-maximal source side: the complement of the vertices
/// that can reach the sink in the residual graph.
MinCut maximal_min_cut(const Network& net, const Flow& flow);

/// Streams every minimum cut exactly once, in a fixed order: depth-first
/// over the closed supersets of the minimal source side, deciding
/// condensation blocks one at a time (exclusion branch first), so the
/// minimal cut is emitted first and the maximal cut last. Stops after
/// `limit` emissions or when `sink` returns false.
///
/// Returns true iff every minimum cut was emitted ("exhausted").
bool enumerate_min_cuts(const Network& net, const Flow& flow,
                        std::size_t limit,
                        const std::function<bool(const MinCut&)>& sink);

/// Convenience overload collecting the cuts.
std::vector<MinCut> enumerate_min_cuts(const Network& net, const Flow& flow,
                                       std::size_t limit,
                                       bool* exhausted = nullptr);

}  // namespace netdec
