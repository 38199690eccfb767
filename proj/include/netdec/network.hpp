#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace netdec {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Largest admissible edge capacity. Keeping capacities at or below 2^62
/// (together with the total-capacity check at construction) guarantees that
/// capacity and flow sums stay inside signed 64-bit range.
inline constexpr std::int64_t kMaxCapacity = std::int64_t{1} << 62;

struct Edge {
  VertexId tail;
  VertexId head;
  std::int64_t capacity;

  bool operator==(const Edge&) const = default;
};

/// Immutable directed network with a distinguished source and sink.
///
/// Edge ids are the 0-based positions in the edge list. Parallel and
/// antiparallel edges are allowed and keep distinct ids; self-loops and
/// non-positive capacities are rejected at construction.
class Network {
 public:
  Network(VertexId vertex_count, VertexId source, VertexId sink,
          std::vector<Edge> edges);

  VertexId vertex_count() const { return vertex_count_; }
  VertexId source() const { return source_; }
  VertexId sink() const { return sink_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }

 private:
  VertexId vertex_count_;
  VertexId source_;
  VertexId sink_;
  std::vector<Edge> edges_;
};

/// Per-edge integer flow values bound to the network they were validated
/// against. Constructing a Flow checks both flow axioms and throws
/// std::invalid_argument on violation; use validate_flow for a non-throwing
/// check with a detailed report.
class Flow {
 public:
  Flow(const Network& net, std::vector<std::int64_t> values);

  const Network& network() const { return *net_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t on(EdgeId e) const { return values_[static_cast<size_t>(e)]; }

  bool operator==(const Flow& other) const { return values_ == other.values_; }

 private:
  const Network* net_;
  std::vector<std::int64_t> values_;
};

enum class FlowViolationKind : std::uint8_t { Capacity, Conservation };

struct FlowViolation {
  FlowViolationKind kind;
  EdgeId edge = -1;      ///< offending edge for capacity violations
  VertexId vertex = -1;  ///< offending vertex for conservation violations
  std::string detail;
};

struct FlowValidation {
  std::optional<Flow> flow;  ///< engaged iff violations is empty
  std::vector<FlowViolation> violations;

  bool ok() const { return flow.has_value(); }
};

/// Checks the capacity and conservation axioms. Returns either a Flow or a
/// report listing every violated edge/vertex. A values list whose length does
/// not match the edge count is a structural error (std::invalid_argument),
/// not an axiom violation.
FlowValidation validate_flow(const Network& net,
                             const std::vector<std::int64_t>& values);

/// Net amount leaving the source: sum of flow on edges out of s minus flow on
/// edges into s.
std::int64_t flow_value(const Flow& flow);

enum class ArcDir : std::uint8_t { Forward, Backward };

/// One arc of the residual graph, tied back to the original edge it refines.
/// The residual graph is kept at edge level (one forward and one backward arc
/// per original edge, as present) so parallel and antiparallel edges never
/// merge capacities.
struct ResidualArc {
  VertexId from;
  VertexId to;
  EdgeId origin_edge;
  ArcDir direction;

  bool operator==(const ResidualArc&) const = default;
};

/// All residual arcs of `flow`: a forward arc for every edge with f(e) < c(e)
/// and a backward arc for every edge with f(e) > 0, ordered by origin edge id
/// with forward before backward.
std::vector<ResidualArc> residual_arcs(const Network& net, const Flow& flow);

}  // namespace netdec
