#include "netdec/network.hpp"

#include <limits>
#include <stdexcept>

namespace netdec {

namespace {

std::string vertex_range_msg(const char* what, VertexId v, VertexId n) {
  return std::string(what) + " id " + std::to_string(v) +
         " out of range [0, " + std::to_string(n) + ")";
}

std::vector<FlowViolation> check_axioms(const Network& net,
                                        const std::vector<std::int64_t>& values) {
  if (values.size() != static_cast<size_t>(net.edge_count())) {
    throw std::invalid_argument(
        "flow values length " + std::to_string(values.size()) +
        " does not match edge count " + std::to_string(net.edge_count()));
  }
  std::vector<FlowViolation> violations;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const std::int64_t f = values[static_cast<size_t>(e)];
    const std::int64_t c = net.edge(e).capacity;
    if (f < 0 || f > c) {
      violations.push_back(
          {FlowViolationKind::Capacity, e, -1,
           "edge " + std::to_string(e) + ": flow " + std::to_string(f) +
               " outside [0, " + std::to_string(c) + "]"});
    }
  }
  std::vector<std::int64_t> balance(static_cast<size_t>(net.vertex_count()), 0);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    const std::int64_t f = values[static_cast<size_t>(e)];
    balance[static_cast<size_t>(ed.head)] += f;
    balance[static_cast<size_t>(ed.tail)] -= f;
  }
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (balance[static_cast<size_t>(v)] != 0) {
      violations.push_back(
          {FlowViolationKind::Conservation, -1, v,
           "vertex " + std::to_string(v) + ": inflow exceeds outflow by " +
               std::to_string(balance[static_cast<size_t>(v)])});
    }
  }
  return violations;
}

}  // namespace

Network::Network(VertexId vertex_count, VertexId source, VertexId sink,
                 std::vector<Edge> edges)
    : vertex_count_(vertex_count),
      source_(source),
      sink_(sink),
      edges_(std::move(edges)) {
  if (vertex_count_ < 2) {
    throw std::invalid_argument("network needs at least two vertices");
  }
  if (source_ < 0 || source_ >= vertex_count_) {
    throw std::invalid_argument(vertex_range_msg("source", source_, vertex_count_));
  }
  if (sink_ < 0 || sink_ >= vertex_count_) {
    throw std::invalid_argument(vertex_range_msg("sink", sink_, vertex_count_));
  }
  if (source_ == sink_) {
    throw std::invalid_argument("source and sink must differ");
  }
  std::int64_t total = 0;
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.tail < 0 || e.tail >= vertex_count_) {
      throw std::invalid_argument("edge " + std::to_string(i) + ": " +
                                  vertex_range_msg("tail", e.tail, vertex_count_));
    }
    if (e.head < 0 || e.head >= vertex_count_) {
      throw std::invalid_argument("edge " + std::to_string(i) + ": " +
                                  vertex_range_msg("head", e.head, vertex_count_));
    }
    if (e.tail == e.head) {
      throw std::invalid_argument("edge " + std::to_string(i) + " is a self-loop");
    }
    if (e.capacity <= 0) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  " has non-positive capacity");
    }
    if (e.capacity > kMaxCapacity) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  " capacity exceeds 2^62");
    }
    if (total > std::numeric_limits<std::int64_t>::max() - e.capacity) {
      throw std::invalid_argument("total capacity exceeds 64-bit range");
    }
    total += e.capacity;
  }
}

Flow::Flow(const Network& net, std::vector<std::int64_t> values)
    : net_(&net), values_(std::move(values)) {
  std::vector<FlowViolation> violations = check_axioms(net, values_);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid flow: " + violations.front().detail);
  }
}

FlowValidation validate_flow(const Network& net,
                             const std::vector<std::int64_t>& values) {
  FlowValidation result;
  result.violations = check_axioms(net, values);
  if (result.violations.empty()) {
    result.flow = Flow(net, values);
  }
  return result;
}

std::int64_t flow_value(const Flow& flow) {
  const Network& net = flow.network();
  std::int64_t value = 0;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    if (ed.tail == net.source()) value += flow.on(e);
    if (ed.head == net.source()) value -= flow.on(e);
  }
  return value;
}

std::vector<ResidualArc> residual_arcs(const Network& net, const Flow& flow) {
  std::vector<ResidualArc> arcs;
  arcs.reserve(2 * static_cast<size_t>(net.edge_count()));
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    if (flow.on(e) < ed.capacity) {
      arcs.push_back({ed.tail, ed.head, e, ArcDir::Forward});
    }
    if (flow.on(e) > 0) {
      arcs.push_back({ed.head, ed.tail, e, ArcDir::Backward});
    }
  }
  return arcs;
}

}  // namespace netdec
