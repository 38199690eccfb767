#include "netdec/decomposition.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace netdec {

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Essential: return "essential";
    case EdgeClass::DummyI: return "dummy_i";
    case EdgeClass::DummyII: return "dummy_ii";
  }
  return "unknown";
}

const char* to_string(BlockType t) {
  switch (t) {
    case BlockType::Start: return "start";
    case BlockType::End: return "end";
    case BlockType::Transfer: return "transfer";
    case BlockType::Direct: return "direct";
    case BlockType::Removable: return "removable";
  }
  return "unknown";
}

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

bool residual_path_to_sink(const Network& net,
                           const std::vector<std::vector<VertexId>>& adj) {
  std::vector<char> seen(static_cast<size_t>(net.vertex_count()), 0);
  std::queue<VertexId> queue;
  seen[static_cast<size_t>(net.source())] = 1;
  queue.push(net.source());
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    if (v == net.sink()) return true;
    for (VertexId w : adj[static_cast<size_t>(v)]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        queue.push(w);
      }
    }
  }
  return false;
}

/// Iterative Tarjan SCC. Component ids are arbitrary here; the caller orders
/// the blocks afterwards.
std::vector<int> tarjan_components(const std::vector<std::vector<VertexId>>& adj,
                                   int& component_count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), lowlink(n, 0), component(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  int next_index = 0;
  component_count = 0;

  struct Frame {
    VertexId v;
    size_t child;
  };
  std::vector<Frame> call_stack;

  for (VertexId root = 0; root < n; ++root) {
    if (index[static_cast<size_t>(root)] != -1) continue;
    call_stack.push_back({root, 0});
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const auto v = static_cast<size_t>(frame.v);
      if (frame.child == 0) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(frame.v);
        on_stack[v] = 1;
      }
      bool descended = false;
      while (frame.child < adj[v].size()) {
        const VertexId w = adj[v][frame.child];
        const auto wi = static_cast<size_t>(w);
        if (index[wi] == -1) {
          ++frame.child;
          call_stack.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[wi]) {
          lowlink[v] = std::min(lowlink[v], index[wi]);
        }
        ++frame.child;
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        while (true) {
          const VertexId w = stack.back();
          stack.pop_back();
          on_stack[static_cast<size_t>(w)] = 0;
          component[static_cast<size_t>(w)] = component_count;
          if (w == frame.v) break;
        }
        ++component_count;
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const auto parent = static_cast<size_t>(call_stack.back().v);
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }
  return component;
}

}  // namespace

std::vector<std::vector<VertexId>> residual_sccs(const Network& net,
                                                 const Flow& flow) {
  const auto adj = residual_adjacency(net, flow);
  if (residual_path_to_sink(net, adj)) {
    throw std::invalid_argument(
        "residual_sccs: flow is not maximum (residual source-to-sink path "
        "exists)");
  }

  int component_count = 0;
  const std::vector<int> component = tarjan_components(adj, component_count);

  std::vector<std::vector<VertexId>> members(
      static_cast<size_t>(component_count));
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    members[static_cast<size_t>(component[static_cast<size_t>(v)])].push_back(v);
  }
  // Vertices are visited in id order, so each member list is already sorted.

  // Order blocks in reverse topological order of the condensation: peel
  // blocks with no unprocessed outgoing condensation edge, smallest
  // contained vertex id first.
  std::vector<int> out_degree(static_cast<size_t>(component_count), 0);
  std::vector<std::vector<int>> preds(static_cast<size_t>(component_count));
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    for (VertexId w : adj[static_cast<size_t>(v)]) {
      const int cv = component[static_cast<size_t>(v)];
      const int cw = component[static_cast<size_t>(w)];
      if (cv != cw) {
        ++out_degree[static_cast<size_t>(cv)];
        preds[static_cast<size_t>(cw)].push_back(cv);
      }
    }
  }
  using Entry = std::pair<VertexId, int>;  // (smallest member, component)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (int c = 0; c < component_count; ++c) {
    if (out_degree[static_cast<size_t>(c)] == 0) {
      ready.emplace(members[static_cast<size_t>(c)].front(), c);
    }
  }
  std::vector<std::vector<VertexId>> blocks;
  blocks.reserve(static_cast<size_t>(component_count));
  while (!ready.empty()) {
    const auto [min_vertex, c] = ready.top();
    ready.pop();
    blocks.push_back(std::move(members[static_cast<size_t>(c)]));
    for (int p : preds[static_cast<size_t>(c)]) {
      if (--out_degree[static_cast<size_t>(p)] == 0) {
        ready.emplace(members[static_cast<size_t>(p)].front(), p);
      }
    }
  }
  return blocks;
}

std::vector<EdgeClass> classify_edges(
    const Network& net, const Flow& flow,
    const std::vector<std::vector<VertexId>>& blocks) {
  std::vector<int> block_of(static_cast<size_t>(net.vertex_count()), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (VertexId v : blocks[b]) block_of[static_cast<size_t>(v)] = static_cast<int>(b);
  }
  std::vector<EdgeClass> classes(static_cast<size_t>(net.edge_count()));
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    if (block_of[static_cast<size_t>(ed.tail)] ==
        block_of[static_cast<size_t>(ed.head)]) {
      classes[static_cast<size_t>(e)] = EdgeClass::DummyI;
    } else if (flow.on(e) > 0) {
      // A cross-block edge is saturated or empty: a partially used edge
      // would contribute residual arcs both ways and merge the blocks.
      if (flow.on(e) != ed.capacity) {
        throw std::logic_error(
            "classify_edges: cross-block edge with partial flow; blocks do "
            "not belong to this flow");
      }
      classes[static_cast<size_t>(e)] = EdgeClass::Essential;
    } else {
      classes[static_cast<size_t>(e)] = EdgeClass::DummyII;
    }
  }
  return classes;
}

std::vector<BlockType> classify_blocks(
    const Network& net, const std::vector<EdgeClass>& edge_class,
    const std::vector<std::vector<VertexId>>& blocks) {
  std::vector<int> block_of(static_cast<size_t>(net.vertex_count()), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (VertexId v : blocks[b]) block_of[static_cast<size_t>(v)] = static_cast<int>(b);
  }
  // Essential in-degree counts edges (parallel edges separately), not tails.
  std::vector<int> essential_in(blocks.size(), 0);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (edge_class[static_cast<size_t>(e)] != EdgeClass::Essential) continue;
    const Edge& ed = net.edge(e);
    const int bt = block_of[static_cast<size_t>(ed.tail)];
    const int bh = block_of[static_cast<size_t>(ed.head)];
    if (bt != bh) ++essential_in[static_cast<size_t>(bh)];
  }
  std::vector<BlockType> types(blocks.size());
  const int source_block = block_of[static_cast<size_t>(net.source())];
  const int sink_block = block_of[static_cast<size_t>(net.sink())];
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (static_cast<int>(b) == source_block) {
      types[b] = BlockType::Start;
    } else if (static_cast<int>(b) == sink_block) {
      types[b] = BlockType::End;
    } else if (essential_in[b] > 1) {
      types[b] = BlockType::Transfer;
    } else if (essential_in[b] == 1) {
      types[b] = BlockType::Direct;
    } else {
      types[b] = BlockType::Removable;
    }
  }
  return types;
}

Decomposition decompose(const Network& net, const Flow& flow) {
  Decomposition dec;
  dec.blocks = residual_sccs(net, flow);
  dec.block_of.assign(static_cast<size_t>(net.vertex_count()), -1);
  for (size_t b = 0; b < dec.blocks.size(); ++b) {
    for (VertexId v : dec.blocks[b]) {
      dec.block_of[static_cast<size_t>(v)] = static_cast<int>(b);
    }
  }
  dec.edge_class = classify_edges(net, flow, dec.blocks);
  dec.block_type = classify_blocks(net, dec.edge_class, dec.blocks);
  return dec;
}

JumpResult jump_exists(const Network& net,
                       const std::vector<EdgeClass>& edge_class, VertexId u,
                       VertexId v) {
  if (u < 0 || u >= net.vertex_count() || v < 0 || v >= net.vertex_count()) {
    throw std::invalid_argument("jump_exists: vertex id out of range");
  }
  if (u == v) return {};

  // States are (vertex, crossed a DummyII edge yet); dummy edges only.
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> dummy_adj(
      static_cast<size_t>(net.vertex_count()));
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (edge_class[static_cast<size_t>(e)] == EdgeClass::Essential) continue;
    const Edge& ed = net.edge(e);
    dummy_adj[static_cast<size_t>(ed.tail)].emplace_back(ed.head, e);
  }

  const auto n = static_cast<size_t>(net.vertex_count());
  auto state_of = [n](VertexId w, bool crossed) {
    return static_cast<size_t>(w) + (crossed ? n : 0);
  };
  std::vector<std::pair<int, EdgeId>> parent(2 * n, {-1, -1});
  std::vector<char> seen(2 * n, 0);
  std::queue<size_t> queue;
  seen[state_of(u, false)] = 1;
  queue.push(state_of(u, false));
  const size_t goal = state_of(v, true);

  while (!queue.empty()) {
    const size_t state = queue.front();
    queue.pop();
    if (state == goal) break;
    const auto w = static_cast<VertexId>(state % n);
    const bool crossed = state >= n;
    for (const auto& [next, e] : dummy_adj[static_cast<size_t>(w)]) {
      const bool next_crossed =
          crossed || edge_class[static_cast<size_t>(e)] == EdgeClass::DummyII;
      const size_t next_state = state_of(next, next_crossed);
      if (!seen[next_state]) {
        seen[next_state] = 1;
        parent[next_state] = {static_cast<int>(state), e};
        queue.push(next_state);
      }
    }
  }

  if (!seen[goal]) return {};
  JumpResult result;
  result.exists = true;
  for (size_t state = goal; parent[state].first != -1;
       state = static_cast<size_t>(parent[state].first)) {
    result.path_edges.push_back(parent[state].second);
  }
  std::reverse(result.path_edges.begin(), result.path_edges.end());
  return result;
}

}  // namespace netdec
