#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netdec/decomposition.hpp"
#include "netdec/mincut.hpp"
#include "netdec/network.hpp"
#include "netdec/rational.hpp"

namespace netdec {

/// Vertex labeling in [0,1] with value 1 at the source and 0 at the sink,
/// non-increasing along essential edges, constant across dummy I edges and
/// non-decreasing along dummy II edges. Indicator labelings of minimum-cut
/// source sides are exactly the 0/1 potentials; general potentials are
/// their convex combinations.
struct Potential {
  std::vector<Rational> values;  ///< indexed by vertex id

  const Rational& at(VertexId v) const { return values[static_cast<size_t>(v)]; }
};

enum class PotentialViolationKind : std::uint8_t {
  Codomain,        ///< value outside [0, 1]
  SourceValue,     ///< value at source differs from 1
  SinkValue,       ///< value at sink differs from 0
  EssentialOrder,  ///< essential edge with increasing values
  DummyIEquality,  ///< dummy I edge with unequal endpoint values
  DummyIIOrder,    ///< dummy II edge with decreasing values
};

struct PotentialViolation {
  PotentialViolationKind kind;
  VertexId vertex = -1;  ///< for value violations
  EdgeId edge = -1;      ///< for order violations
  std::string detail;
};

struct PotentialValidation {
  std::optional<Potential> potential;  ///< engaged iff violations is empty
  std::vector<PotentialViolation> violations;

  bool ok() const { return potential.has_value(); }
};

/// Checks all three potential conditions; returns either the Potential or
/// the full list of violated vertices/edges. A values list of the wrong
/// length is a structural error (std::invalid_argument).
PotentialValidation validate_potential(const Network& net,
                                       const Decomposition& dec,
                                       const std::vector<Rational>& values);

/// True iff the 0/1 indicator of `source_side` is a potential function,
/// which happens exactly when the side induces a minimum cut.
bool indicator_is_potential(const Network& net, const Decomposition& dec,
                            const std::vector<VertexId>& source_side);

/// Per-edge drop of a valid potential: value(tail) - value(head) on
/// essential edges, zero elsewhere. Ranges over the convex hull of the
/// minimum-cut indicator vectors as the potential varies.
std::vector<Rational> diff_star(const Network& net, const Decomposition& dec,
                                const Potential& pot);

/// Writes a valid potential as a weighted chain of nested minimum-cut
/// source sides: thresholds are the distinct positive values in increasing
/// order (the last is 1) and level_sets[k] holds the vertices whose value
/// exceeds thresholds[k-1]. The potential equals
///   thresholds[0] * chi(level_sets[0]) +
///   sum_k (thresholds[k] - thresholds[k-1]) * chi(level_sets[k]).
struct LevelDecomposition {
  std::vector<Rational> thresholds;
  std::vector<std::vector<VertexId>> level_sets;

  std::vector<Rational> weights() const;
};

LevelDecomposition level_decompose(const Network& net, const Decomposition& dec,
                                   const Potential& pot);

/// Convex combination of minimum-cut indicator potentials. Weights must be
/// non-negative and sum to exactly 1 (std::invalid_argument otherwise).
Potential combine_cuts(const Network& net, const Decomposition& dec,
                       const std::vector<MinCut>& cuts,
                       const std::vector<Rational>& weights);

/// Strong-duality identity: the capacity-weighted sum of essential-edge
/// drops equals the maximum flow value. Holds for every valid potential;
/// exposed as a self-check.
bool check_dual_optimal(const Network& net, const Decomposition& dec,
                        const Potential& pot, std::int64_t max_flow_value);

/// Seeded random convex combination of minimum-cut indicators (weights use
/// denominators <= 64 to keep the rationals small). Deterministic for a
/// fixed seed; the result always validates.
Potential sample_potential(const Network& net, const Decomposition& dec,
                           std::uint64_t seed);

class PotentialParseError : public std::runtime_error {
 public:
  PotentialParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Potential file format: one line per vertex, "<vertex-id> <num>/<den>",
/// 1-based vertex ids matching the DIMACS ids; blank lines and lines opening
/// with '#' are skipped. Every vertex must be assigned exactly once.
std::vector<Rational> parse_potential_file(std::string_view text,
                                           VertexId vertex_count);

std::string serialize_potential(const std::vector<Rational>& values);

}  // namespace netdec
