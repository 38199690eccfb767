#include "netdec/oracle.hpp"

#include <algorithm>
#include <limits>

namespace netdec {

namespace {

void check_flow_guard(const Network& net) {
  unsigned __int128 space = 1;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    space *= static_cast<unsigned __int128>(net.edge(e).capacity) + 1;
    if (space > static_cast<unsigned __int128>(kFlowEnumerationBound)) {
      throw SizeGuardError(
          "flow enumeration refused: product of (capacity+1) over edges "
          "exceeds " +
          std::to_string(kFlowEnumerationBound));
    }
  }
}

void check_cut_guard(const Network& net) {
  const int free_vertices = net.vertex_count() - 2;
  if (free_vertices >= 63 ||
      (std::int64_t{1} << free_vertices) > kCutEnumerationBound) {
    throw SizeGuardError(
        "cut enumeration refused: 2^(vertex_count-2) exceeds " +
        std::to_string(kCutEnumerationBound));
  }
}

/// DFS state for integral flow enumeration. Edges are assigned in id order;
/// a vertex stays viable while its current imbalance can still be repaired
/// by the unassigned edges incident to it.
struct FlowSearch {
  const Network& net;
  const std::function<void(const std::vector<std::int64_t>&)>& emit;
  CancelToken cancel;

  std::vector<std::int64_t> values;
  std::vector<std::int64_t> balance;        // inflow - outflow assigned so far
  std::vector<std::int64_t> remaining_in;   // capacity of unassigned in-edges
  std::vector<std::int64_t> remaining_out;  // capacity of unassigned out-edges
  std::uint64_t steps = 0;

  explicit FlowSearch(
      const Network& n,
      const std::function<void(const std::vector<std::int64_t>&)>& e,
      CancelToken c)
      : net(n), emit(e), cancel(c) {
    values.assign(static_cast<size_t>(net.edge_count()), 0);
    balance.assign(static_cast<size_t>(net.vertex_count()), 0);
    remaining_in.assign(static_cast<size_t>(net.vertex_count()), 0);
    remaining_out.assign(static_cast<size_t>(net.vertex_count()), 0);
    for (EdgeId e2 = 0; e2 < net.edge_count(); ++e2) {
      const Edge& ed = net.edge(e2);
      remaining_in[static_cast<size_t>(ed.head)] += ed.capacity;
      remaining_out[static_cast<size_t>(ed.tail)] += ed.capacity;
    }
  }

  bool viable(VertexId v) const {
    if (v == net.source() || v == net.sink()) return true;
    const auto b = balance[static_cast<size_t>(v)];
    return b <= remaining_out[static_cast<size_t>(v)] &&
           -b <= remaining_in[static_cast<size_t>(v)];
  }

  void run(EdgeId e) {
    if ((++steps & 0xFFF) == 0 && cancel.cancelled()) {
      throw OperationCancelled();
    }
    if (e == net.edge_count()) {
      // remaining_* are all zero here, so viability means exact balance.
      emit(values);
      return;
    }
    const Edge& ed = net.edge(e);
    const auto tail = static_cast<size_t>(ed.tail);
    const auto head = static_cast<size_t>(ed.head);
    remaining_out[tail] -= ed.capacity;
    remaining_in[head] -= ed.capacity;
    for (std::int64_t f = 0; f <= ed.capacity; ++f) {
      values[static_cast<size_t>(e)] = f;
      balance[head] += f;
      balance[tail] -= f;
      if (viable(ed.tail) && viable(ed.head)) run(e + 1);
      balance[head] -= f;
      balance[tail] += f;
    }
    values[static_cast<size_t>(e)] = 0;
    remaining_out[tail] += ed.capacity;
    remaining_in[head] += ed.capacity;
  }
};

}  // namespace

void enumerate_integral_flows(
    const Network& net,
    const std::function<void(const std::vector<std::int64_t>&)>& emit,
    CancelToken cancel) {
  check_flow_guard(net);
  FlowSearch search(net, emit, cancel);
  search.run(0);
}

std::vector<Flow> enumerate_integral_flows(const Network& net,
                                           CancelToken cancel) {
  std::vector<Flow> flows;
  enumerate_integral_flows(
      net,
      [&](const std::vector<std::int64_t>& values) {
        flows.push_back(Flow(net, values));
      },
      cancel);
  return flows;
}

std::int64_t cut_capacity(const Network& net,
                          const std::vector<VertexId>& source_side) {
  std::vector<char> in_side(static_cast<size_t>(net.vertex_count()), 0);
  for (VertexId v : source_side) in_side[static_cast<size_t>(v)] = 1;
  std::int64_t capacity = 0;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    if (in_side[static_cast<size_t>(ed.tail)] &&
        !in_side[static_cast<size_t>(ed.head)]) {
      capacity += ed.capacity;
    }
  }
  return capacity;
}

std::vector<std::vector<VertexId>> enumerate_cuts_brute(const Network& net,
                                                        CancelToken cancel) {
  check_cut_guard(net);
  std::vector<VertexId> free_vertices;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (v != net.source() && v != net.sink()) free_vertices.push_back(v);
  }

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::vector<VertexId>> best_sides;
  const std::uint64_t count = std::uint64_t{1} << free_vertices.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if ((mask & 0xFFF) == 0 && cancel.cancelled()) throw OperationCancelled();
    std::vector<VertexId> side{net.source()};
    for (size_t i = 0; i < free_vertices.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) side.push_back(free_vertices[i]);
    }
    std::sort(side.begin(), side.end());
    const std::int64_t cap = cut_capacity(net, side);
    if (cap < best) {
      best = cap;
      best_sides.clear();
    }
    if (cap == best) best_sides.push_back(std::move(side));
  }
  return best_sides;
}

OracleReport classify_by_enumeration(const Network& net, CancelToken cancel) {
  check_flow_guard(net);
  check_cut_guard(net);

  OracleReport report;
  const auto m = static_cast<size_t>(net.edge_count());
  report.per_edge_min.assign(m, 0);
  report.per_edge_max.assign(m, 0);

  // Source-incident edges with orientation sign, for the flow value.
  std::vector<std::pair<size_t, int>> source_terms;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (net.edge(e).tail == net.source()) source_terms.emplace_back(e, +1);
    if (net.edge(e).head == net.source()) source_terms.emplace_back(e, -1);
  }

  bool seen_any = false;
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  enumerate_integral_flows(
      net,
      [&](const std::vector<std::int64_t>& values) {
        std::int64_t value = 0;
        for (auto [e, sign] : source_terms) value += sign * values[e];
        if (!seen_any || value > best) {
          seen_any = true;
          best = value;
          report.per_edge_min = values;
          report.per_edge_max = values;
          return;
        }
        if (value < best) return;
        for (size_t e = 0; e < m; ++e) {
          report.per_edge_min[e] = std::min(report.per_edge_min[e], values[e]);
          report.per_edge_max[e] = std::max(report.per_edge_max[e], values[e]);
        }
      },
      cancel);
  report.max_flow_value = best;  // the zero flow always exists, so best >= 0

  report.edge_class.resize(m);
  for (size_t e = 0; e < m; ++e) {
    const std::int64_t cap = net.edge(static_cast<EdgeId>(e)).capacity;
    if (report.per_edge_min[e] == cap) {
      report.edge_class[e] = EdgeClass::Essential;
    } else if (report.per_edge_max[e] == 0) {
      report.edge_class[e] = EdgeClass::DummyII;
    } else {
      report.edge_class[e] = EdgeClass::DummyI;
    }
  }

  report.min_cut_sides = enumerate_cuts_brute(net, cancel);
  report.min_cut_capacity = cut_capacity(net, report.min_cut_sides.front());
  return report;
}

}  // namespace netdec
