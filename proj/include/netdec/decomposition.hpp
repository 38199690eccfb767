#pragma once

#include <vector>

#include "netdec/network.hpp"

namespace netdec {

/// How an edge behaves across the set of all maximum flows:
///   Essential — saturated in every maximum flow,
///   DummyI    — strictly between 0 and capacity in some maximum flow,
///   DummyII   — empty in every maximum flow.
/// Computed combinatorially from one maximum flow: an edge is DummyI exactly
/// when its endpoints share a residual strongly connected component; the
/// remaining edges split by whether they carry flow.
enum class EdgeClass : std::uint8_t { Essential, DummyI, DummyII };

/// Role of a residual SCC block: Start contains the source, End the sink;
/// the rest are classified by the number of essential edges entering the
/// block from outside (>1 Transfer, =1 Direct, =0 Removable).
enum class BlockType : std::uint8_t { Start, End, Transfer, Direct, Removable };

const char* to_string(EdgeClass c);
const char* to_string(BlockType t);

/// Block partition plus edge and block classification derived from one
/// maximum flow. The partition itself does not depend on which maximum flow
/// was used.
struct Decomposition {
  /// Residual SCCs in reverse topological order of the condensation (ties
  /// broken by smallest contained vertex id); members sorted ascending.
  std::vector<std::vector<VertexId>> blocks;
  std::vector<int> block_of;            ///< vertex id -> index into blocks
  std::vector<EdgeClass> edge_class;    ///< per edge id
  std::vector<BlockType> block_type;    ///< per block
};

/// SCC partition of the residual graph of a maximum flow. Throws
/// std::invalid_argument when the flow is not maximum (a residual
/// source-to-sink path exists).
std::vector<std::vector<VertexId>> residual_sccs(const Network& net,
                                                 const Flow& flow);

std::vector<EdgeClass> classify_edges(
    const Network& net, const Flow& flow,
    const std::vector<std::vector<VertexId>>& blocks);

std::vector<BlockType> classify_blocks(
    const Network& net, const std::vector<EdgeClass>& edge_class,
    const std::vector<std::vector<VertexId>>& blocks);

/// Runs the three steps above on one maximum flow.
Decomposition decompose(const Network& net, const Flow& flow);

struct JumpResult {
  bool exists = false;
  std::vector<EdgeId> path_edges;  ///< witness, in traversal order, when found
};

/// True iff a directed path from u to v uses dummy edges only and at least
/// one of them is DummyII. BFS over (vertex, crossed-a-DummyII-edge) states;
/// the witness is a shortest such path. u == v returns false: a jump is a
/// path between two distinct vertices, not a cycle.
JumpResult jump_exists(const Network& net,
                       const std::vector<EdgeClass>& edge_class, VertexId u,
                       VertexId v);

}  // namespace netdec
