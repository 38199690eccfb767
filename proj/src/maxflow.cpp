#include "netdec/maxflow.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace netdec {

namespace {

/// Arc-indexed residual view: arc 2e is the forward arc of edge e, arc 2e+1
/// its backward arc. Adjacency lists hold arc ids in ascending order, which
/// pins down the scan order everywhere.
struct ResidualView {
  const Network& net;
  std::vector<std::int64_t> flow;
  std::vector<std::vector<int>> adj;

  explicit ResidualView(const Network& n, std::vector<std::int64_t> f)
      : net(n), flow(std::move(f)) {
    adj.assign(static_cast<size_t>(net.vertex_count()), {});
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      const Edge& ed = net.edge(e);
      adj[static_cast<size_t>(ed.tail)].push_back(2 * e);
      adj[static_cast<size_t>(ed.head)].push_back(2 * e + 1);
    }
  }

  VertexId arc_from(int a) const {
    const Edge& ed = net.edge(a / 2);
    return (a & 1) ? ed.head : ed.tail;
  }
  VertexId arc_to(int a) const {
    const Edge& ed = net.edge(a / 2);
    return (a & 1) ? ed.tail : ed.head;
  }
  std::int64_t residual(int a) const {
    const EdgeId e = a / 2;
    return (a & 1) ? flow[static_cast<size_t>(e)]
                   : net.edge(e).capacity - flow[static_cast<size_t>(e)];
  }
  void push(int a, std::int64_t amount) {
    flow[static_cast<size_t>(a / 2)] += (a & 1) ? -amount : amount;
  }
};

struct Dinic {
  ResidualView rv;
  std::vector<int> level;
  std::vector<size_t> next_arc;

  explicit Dinic(const Network& net)
      : rv(net, std::vector<std::int64_t>(
                    static_cast<size_t>(net.edge_count()), 0)) {}

  bool build_levels() {
    level.assign(static_cast<size_t>(rv.net.vertex_count()), -1);
    std::queue<VertexId> queue;
    level[static_cast<size_t>(rv.net.source())] = 0;
    queue.push(rv.net.source());
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (int a : rv.adj[static_cast<size_t>(v)]) {
        if (rv.residual(a) <= 0) continue;
        const VertexId w = rv.arc_to(a);
        if (level[static_cast<size_t>(w)] != -1) continue;
        level[static_cast<size_t>(w)] = level[static_cast<size_t>(v)] + 1;
        queue.push(w);
      }
    }
    return level[static_cast<size_t>(rv.net.sink())] != -1;
  }

  std::int64_t blocking_push(VertexId v, std::int64_t limit) {
    if (v == rv.net.sink()) return limit;
    auto& cursor = next_arc[static_cast<size_t>(v)];
    const auto& arcs = rv.adj[static_cast<size_t>(v)];
    while (cursor < arcs.size()) {
      const int a = arcs[cursor];
      const VertexId w = rv.arc_to(a);
      if (rv.residual(a) > 0 &&
          level[static_cast<size_t>(w)] == level[static_cast<size_t>(v)] + 1) {
        const std::int64_t pushed =
            blocking_push(w, std::min(limit, rv.residual(a)));
        if (pushed > 0) {
          rv.push(a, pushed);
          return pushed;
        }
      }
      ++cursor;
    }
    return 0;
  }

  std::int64_t run() {
    std::int64_t total = 0;
    while (build_levels()) {
      next_arc.assign(static_cast<size_t>(rv.net.vertex_count()), 0);
      while (std::int64_t pushed = blocking_push(
                 rv.net.source(), std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }
};

}  // namespace

MaxFlowResult max_flow(const Network& net) {
  Dinic dinic(net);
  const std::int64_t value = dinic.run();
  return {Flow(net, std::move(dinic.rv.flow)), value};
}

Flow augment_cycle(const Flow& flow, const std::vector<ResidualArc>& cycle,
                   std::int64_t amount) {
  const Network& net = flow.network();
  if (cycle.empty()) {
    throw std::invalid_argument("augment_cycle: empty arc list");
  }
  if (amount < 1) {
    throw std::invalid_argument("augment_cycle: amount must be positive");
  }
  std::vector<char> seen(static_cast<size_t>(net.vertex_count()), 0);
  for (size_t i = 0; i < cycle.size(); ++i) {
    const ResidualArc& arc = cycle[i];
    const ResidualArc& next = cycle[(i + 1) % cycle.size()];
    if (arc.origin_edge < 0 || arc.origin_edge >= net.edge_count()) {
      throw std::invalid_argument("augment_cycle: arc references unknown edge");
    }
    const Edge& ed = net.edge(arc.origin_edge);
    const bool forward = arc.direction == ArcDir::Forward;
    if (arc.from != (forward ? ed.tail : ed.head) ||
        arc.to != (forward ? ed.head : ed.tail)) {
      throw std::invalid_argument(
          "augment_cycle: arc endpoints do not match its origin edge");
    }
    if (arc.to != next.from) {
      throw std::invalid_argument("augment_cycle: arcs do not form a cycle");
    }
    if (seen[static_cast<size_t>(arc.from)]) {
      throw std::invalid_argument("augment_cycle: cycle revisits a vertex");
    }
    seen[static_cast<size_t>(arc.from)] = 1;
    const std::int64_t residual = forward
                                      ? ed.capacity - flow.on(arc.origin_edge)
                                      : flow.on(arc.origin_edge);
    if (residual < amount) {
      throw std::invalid_argument(
          "augment_cycle: amount exceeds residual capacity of an arc");
    }
  }
  std::vector<std::int64_t> values = flow.values();
  for (const ResidualArc& arc : cycle) {
    values[static_cast<size_t>(arc.origin_edge)] +=
        arc.direction == ArcDir::Forward ? amount : -amount;
  }
  return Flow(net, std::move(values));
}

namespace {

/// Simple directed cycles of the residual graph, each reported once: a cycle
/// is discovered from its smallest vertex, walking only vertices >= that
/// root, with arcs tried in ascending id order.
std::vector<std::vector<ResidualArc>> simple_residual_cycles(
    const Network& net, const Flow& flow) {
  ResidualView rv(net, flow.values());
  const auto n = static_cast<size_t>(net.vertex_count());

  std::vector<std::vector<ResidualArc>> cycles;
  std::vector<ResidualArc> path;
  std::vector<char> on_path(n, 0);

  auto arc_of = [&](int a) {
    return ResidualArc{rv.arc_from(a), rv.arc_to(a), a / 2,
                       (a & 1) ? ArcDir::Backward : ArcDir::Forward};
  };

  std::function<void(VertexId, VertexId)> walk = [&](VertexId root, VertexId v) {
    for (int a : rv.adj[static_cast<size_t>(v)]) {
      if (rv.residual(a) <= 0) continue;
      const VertexId w = rv.arc_to(a);
      if (w < root) continue;
      if (w == root) {
        path.push_back(arc_of(a));
        cycles.push_back(path);
        path.pop_back();
      } else if (!on_path[static_cast<size_t>(w)]) {
        on_path[static_cast<size_t>(w)] = 1;
        path.push_back(arc_of(a));
        walk(root, w);
        path.pop_back();
        on_path[static_cast<size_t>(w)] = 0;
      }
    }
  };

  for (VertexId root = 0; root < net.vertex_count(); ++root) {
    on_path[static_cast<size_t>(root)] = 1;
    walk(root, root);
    on_path[static_cast<size_t>(root)] = 0;
  }
  return cycles;
}

}  // namespace

std::vector<Flow> enumerate_max_flows(const Network& net, std::size_t limit) {
  if (limit < 1) {
    throw std::invalid_argument("enumerate_max_flows: limit must be >= 1");
  }
  MaxFlowResult base = max_flow(net);

  std::vector<Flow> found;
  std::set<std::vector<std::int64_t>> visited;
  std::queue<Flow> frontier;
  visited.insert(base.flow.values());
  found.push_back(base.flow);
  frontier.push(std::move(base.flow));

  // Any two integral maximum flows differ by a residual circulation, which
  // decomposes into simple residual cycles; unit pushes along simple cycles
  // therefore reach every integral maximum flow.
  while (!frontier.empty() && found.size() < limit) {
    const Flow current = std::move(frontier.front());
    frontier.pop();
    for (const auto& cycle : simple_residual_cycles(net, current)) {
      Flow next = augment_cycle(current, cycle, 1);
      if (visited.insert(next.values()).second) {
        found.push_back(next);
        frontier.push(std::move(next));
        if (found.size() == limit) break;
      }
    }
  }
  return found;
}

}  // namespace netdec
