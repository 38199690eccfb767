#pragma once

#include <atomic>
#include <functional>
#include <stdexcept>
#include <vector>

#include "netdec/decomposition.hpp"
#include "netdec/network.hpp"

namespace netdec {

/// Cooperative cancellation for long-running enumerations. The caller keeps
/// the flag alive and sets it from another thread; enumeration loops poll it
/// and abort by throwing OperationCancelled.
struct CancelToken {
  const std::atomic<bool>* flag = nullptr;

  bool cancelled() const {
    return flag != nullptr && flag->load(std::memory_order_relaxed);
  }
};

class OperationCancelled : public std::runtime_error {
 public:
  OperationCancelled() : std::runtime_error("operation cancelled") {}
};

/// Hard refusal when an instance exceeds the brute-force bounds below.
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Flow enumeration refuses when the raw search space, the product of
/// (capacity + 1) over all edges, exceeds this bound.
inline constexpr std::int64_t kFlowEnumerationBound = 100'000'000;

/// Cut enumeration refuses when 2^(vertex_count - 2) exceeds this bound.
inline constexpr std::int64_t kCutEnumerationBound = std::int64_t{1} << 15;

/// Streams every integral feasible flow exactly once (DFS over per-edge
/// values in edge-id order with conservation pruning). Refuses with
/// SizeGuardError when the raw search space exceeds kFlowEnumerationBound.
void enumerate_integral_flows(
    const Network& net,
    const std::function<void(const std::vector<std::int64_t>&)>& emit,
    CancelToken cancel = {});

/// Convenience overload materializing the flows; intended for small tests.
std::vector<Flow> enumerate_integral_flows(const Network& net,
                                           CancelToken cancel = {});

/// Capacity of the cut leaving `source_side` (sum over edges with tail inside
/// and head outside).
std::int64_t cut_capacity(const Network& net,
                          const std::vector<VertexId>& source_side);

/// Scans every vertex set containing the source and excluding the sink and
/// returns the sides attaining minimum cut capacity, ordered by increasing
/// characteristic bitmask. Refuses beyond kCutEnumerationBound.
std::vector<std::vector<VertexId>> enumerate_cuts_brute(const Network& net,
                                                        CancelToken cancel = {});

/// Exhaustive ground truth for one instance. Edge classes are obtained from
/// the per-edge range over all *integral* maximum flows:
///   essential  iff min over maximum flows of f(e) equals c(e),
///   dummy II   iff max over maximum flows of f(e) equals 0,
///   dummy I    otherwise.
/// Integral enumeration settles the fractional quantifier too: the optimal
/// face of the flow polytope has integral vertices, so f(e) < c(e) (or
/// f(e) > 0) holds at some fractional maximum flow iff it holds at an
/// integral one, and when both one-sided witnesses exist their average is a
/// maximum flow with 0 < f(e) < c(e).
struct OracleReport {
  std::int64_t max_flow_value = 0;
  std::vector<std::int64_t> per_edge_min;  ///< over all integral max flows
  std::vector<std::int64_t> per_edge_max;
  std::vector<EdgeClass> edge_class;
  std::vector<std::vector<VertexId>> min_cut_sides;
  std::int64_t min_cut_capacity = 0;
};

OracleReport classify_by_enumeration(const Network& net,
                                     CancelToken cancel = {});

}  // namespace netdec
