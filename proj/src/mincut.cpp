#include "netdec/mincut.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "closed_sets.hpp"
#include "netdec/decomposition.hpp"

namespace netdec {

namespace {

std::vector<std::vector<VertexId>> residual_adjacency(const Network& net,
                                                      const Flow& flow) {
  std::vector<std::vector<VertexId>> adj(
      static_cast<size_t>(net.vertex_count()));
  for (const ResidualArc& arc : residual_arcs(net, flow)) {
    adj[static_cast<size_t>(arc.from)].push_back(arc.to);
  }
  return adj;
}

std::vector<char> reachable_from(const std::vector<std::vector<VertexId>>& adj,
                                 VertexId start) {
  std::vector<char> seen(adj.size(), 0);
  std::queue<VertexId> queue;
  seen[static_cast<size_t>(start)] = 1;
  queue.push(start);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (VertexId w : adj[static_cast<size_t>(v)]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        queue.push(w);
      }
    }
  }
  return seen;
}

MinCut cut_from_mask(const Network& net, const std::vector<char>& in_side) {
  MinCut cut;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (in_side[static_cast<size_t>(v)]) cut.source_side.push_back(v);
  }
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    const bool tail_in = in_side[static_cast<size_t>(ed.tail)];
    const bool head_in = in_side[static_cast<size_t>(ed.head)];
    if (tail_in && !head_in) {
      cut.cut_edges.push_back(e);
      cut.capacity += ed.capacity;
    } else if (!tail_in && head_in) {
      cut.back_edges.push_back(e);
    }
  }
  return cut;
}

}  // namespace

bool is_min_cut(const Network& net, const Flow& flow,
                const std::vector<VertexId>& source_side) {
  std::vector<char> in_side(static_cast<size_t>(net.vertex_count()), 0);
  for (VertexId v : source_side) {
    if (v < 0 || v >= net.vertex_count()) {
      throw std::invalid_argument("is_min_cut: vertex id out of range");
    }
    in_side[static_cast<size_t>(v)] = 1;
  }
  if (!in_side[static_cast<size_t>(net.source())]) return false;
  if (in_side[static_cast<size_t>(net.sink())]) return false;
  for (const ResidualArc& arc : residual_arcs(net, flow)) {
    if (in_side[static_cast<size_t>(arc.from)] &&
        !in_side[static_cast<size_t>(arc.to)]) {
      return false;
    }
  }
  return true;
}

MinCut minimal_min_cut(const Network& net, const Flow& flow) {
  return cut_from_mask(
      net, reachable_from(residual_adjacency(net, flow), net.source()));
}

MinCut maximal_min_cut(const Network& net, const Flow& flow) {
  // Reverse-residual reachability from the sink.
  std::vector<std::vector<VertexId>> radj(
      static_cast<size_t>(net.vertex_count()));
  for (const ResidualArc& arc : residual_arcs(net, flow)) {
    radj[static_cast<size_t>(arc.to)].push_back(arc.from);
  }
  std::vector<char> reaches_sink = reachable_from(radj, net.sink());
  std::vector<char> in_side(reaches_sink.size());
  for (size_t i = 0; i < in_side.size(); ++i) in_side[i] = !reaches_sink[i];
  return cut_from_mask(net, in_side);
}

bool enumerate_min_cuts(const Network& net, const Flow& flow,
                        std::size_t limit,
                        const std::function<bool(const MinCut&)>& sink) {
  if (limit < 1) {
    throw std::invalid_argument("enumerate_min_cuts: limit must be >= 1");
  }
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (const ResidualArc& arc : residual_arcs(net, flow)) {
    arcs.emplace_back(arc.from, arc.to);
  }
  const internal::BlockDag dag =
      internal::make_block_dag(net, residual_sccs(net, flow), arcs);
  return internal::enumerate_closed_sets(
      net, dag, limit, [&](const std::vector<char>& in_side) {
        return sink(cut_from_mask(net, in_side));
      });
}

std::vector<MinCut> enumerate_min_cuts(const Network& net, const Flow& flow,
                                       std::size_t limit, bool* exhausted) {
  std::vector<MinCut> cuts;
  const bool done = enumerate_min_cuts(net, flow, limit,
                                       [&](const MinCut& cut) {
                                         cuts.push_back(cut);
                                         return true;
                                       });
  if (exhausted != nullptr) *exhausted = done;
  return cuts;
}

}  // namespace netdec
