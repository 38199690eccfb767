#include "netdec/potential.hpp"

#include <algorithm>
#include <sstream>

#include "closed_sets.hpp"

namespace netdec {

namespace {

const Rational kZero{0};
const Rational kOne{1};

std::vector<PotentialViolation> check_conditions(
    const Network& net, const Decomposition& dec,
    const std::vector<Rational>& values) {
  if (values.size() != static_cast<size_t>(net.vertex_count())) {
    throw std::invalid_argument(
        "potential values length " + std::to_string(values.size()) +
        " does not match vertex count " + std::to_string(net.vertex_count()));
  }
  std::vector<PotentialViolation> violations;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    const Rational& x = values[static_cast<size_t>(v)];
    if (x < kZero || x > kOne) {
      violations.push_back({PotentialViolationKind::Codomain, v, -1,
                            "vertex " + std::to_string(v) + ": value " +
                                x.str() + " outside [0, 1]"});
    }
  }
  if (values[static_cast<size_t>(net.source())] != kOne) {
    violations.push_back(
        {PotentialViolationKind::SourceValue, net.source(), -1,
         "source value is " + values[static_cast<size_t>(net.source())].str() +
             ", expected 1/1"});
  }
  if (values[static_cast<size_t>(net.sink())] != kZero) {
    violations.push_back(
        {PotentialViolationKind::SinkValue, net.sink(), -1,
         "sink value is " + values[static_cast<size_t>(net.sink())].str() +
             ", expected 0/1"});
  }
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    const Rational& tail = values[static_cast<size_t>(ed.tail)];
    const Rational& head = values[static_cast<size_t>(ed.head)];
    switch (dec.edge_class[static_cast<size_t>(e)]) {
      case EdgeClass::Essential:
        if (tail < head) {
          violations.push_back({PotentialViolationKind::EssentialOrder, -1, e,
                                "essential edge " + std::to_string(e) +
                                    ": value rises from " + tail.str() +
                                    " to " + head.str()});
        }
        break;
      case EdgeClass::DummyI:
        // Dummy I endpoints share a residual block, and every potential is
        // constant on blocks; a one-sided bound here would admit labelings
        // whose drop vector lies outside the minimum-cut hull.
        if (tail != head) {
          violations.push_back({PotentialViolationKind::DummyIEquality, -1, e,
                                "dummy I edge " + std::to_string(e) +
                                    ": values " + tail.str() + " and " +
                                    head.str() + " must be equal"});
        }
        break;
      case EdgeClass::DummyII:
        if (tail > head) {
          violations.push_back({PotentialViolationKind::DummyIIOrder, -1, e,
                                "dummy II edge " + std::to_string(e) +
                                    ": value falls from " + tail.str() +
                                    " to " + head.str()});
        }
        break;
    }
  }
  return violations;
}

}  // namespace

PotentialValidation validate_potential(const Network& net,
                                       const Decomposition& dec,
                                       const std::vector<Rational>& values) {
  PotentialValidation result;
  result.violations = check_conditions(net, dec, values);
  if (result.violations.empty()) {
    result.potential = Potential{values};
  }
  return result;
}

bool indicator_is_potential(const Network& net, const Decomposition& dec,
                            const std::vector<VertexId>& source_side) {
  std::vector<Rational> values(static_cast<size_t>(net.vertex_count()), kZero);
  for (VertexId v : source_side) {
    if (v < 0 || v >= net.vertex_count()) {
      throw std::invalid_argument("indicator_is_potential: vertex id out of range");
    }
    values[static_cast<size_t>(v)] = kOne;
  }
  return validate_potential(net, dec, values).ok();
}

std::vector<Rational> diff_star(const Network& net, const Decomposition& dec,
                                const Potential& pot) {
  std::vector<Rational> result(static_cast<size_t>(net.edge_count()), kZero);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (dec.edge_class[static_cast<size_t>(e)] != EdgeClass::Essential) continue;
    const Edge& ed = net.edge(e);
    result[static_cast<size_t>(e)] = pot.at(ed.tail) - pot.at(ed.head);
  }
  return result;
}

std::vector<Rational> LevelDecomposition::weights() const {
  std::vector<Rational> result;
  result.reserve(thresholds.size());
  for (size_t k = 0; k < thresholds.size(); ++k) {
    result.push_back(k == 0 ? thresholds[0] : thresholds[k] - thresholds[k - 1]);
  }
  return result;
}

LevelDecomposition level_decompose(const Network& net,
                                   const Decomposition& /*dec*/,
                                   const Potential& pot) {
  LevelDecomposition result;
  std::vector<Rational> positive;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (pot.at(v) > kZero) positive.push_back(pot.at(v));
  }
  std::sort(positive.begin(), positive.end());
  positive.erase(std::unique(positive.begin(), positive.end()), positive.end());
  result.thresholds = positive;

  Rational previous = kZero;
  for (const Rational& threshold : result.thresholds) {
    std::vector<VertexId> level;
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
      if (pot.at(v) > previous) level.push_back(v);
    }
    result.level_sets.push_back(std::move(level));
    previous = threshold;
  }
  return result;
}

Potential combine_cuts(const Network& net, const Decomposition& dec,
                       const std::vector<MinCut>& cuts,
                       const std::vector<Rational>& weights) {
  if (cuts.empty()) {
    throw std::invalid_argument("combine_cuts: need at least one cut");
  }
  if (cuts.size() != weights.size()) {
    throw std::invalid_argument("combine_cuts: one weight per cut required");
  }
  Rational total = kZero;
  for (const Rational& w : weights) {
    if (w < kZero) {
      throw std::invalid_argument("combine_cuts: negative weight");
    }
    total = total + w;
  }
  if (total != kOne) {
    throw std::invalid_argument("combine_cuts: weights must sum to 1, got " +
                                total.str());
  }

  std::vector<Rational> values(static_cast<size_t>(net.vertex_count()), kZero);
  for (size_t i = 0; i < cuts.size(); ++i) {
    for (VertexId v : cuts[i].source_side) {
      values[static_cast<size_t>(v)] = values[static_cast<size_t>(v)] + weights[i];
    }
  }
  PotentialValidation checked = validate_potential(net, dec, values);
  if (!checked.ok()) {
    throw std::invalid_argument(
        "combine_cuts: combination is not a potential (" +
        checked.violations.front().detail +
        "); were the cuts taken from this decomposition?");
  }
  return *std::move(checked.potential);
}

bool check_dual_optimal(const Network& net, const Decomposition& dec,
                        const Potential& pot, std::int64_t max_flow_value) {
  Rational total = kZero;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (dec.edge_class[static_cast<size_t>(e)] != EdgeClass::Essential) continue;
    const Edge& ed = net.edge(e);
    total = total + Rational(ed.capacity) * (pot.at(ed.tail) - pot.at(ed.head));
  }
  return total == Rational(max_flow_value);
}

namespace {

/// Deterministic, platform-independent 64-bit generator.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace

Potential sample_potential(const Network& net, const Decomposition& dec,
                           std::uint64_t seed) {
  // Minimum-cut source sides straight from the classification, keeping the
  // sampler independent of any flow: a side must not split a block, must not
  // lose a dummy II edge forward, and must not lose an essential edge
  // backward. These are exactly the closed sets of the residual graph.
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    switch (dec.edge_class[static_cast<size_t>(e)]) {
      case EdgeClass::Essential:
        arcs.emplace_back(ed.head, ed.tail);
        break;
      case EdgeClass::DummyI:  // intra-block; bind both ways
        arcs.emplace_back(ed.tail, ed.head);
        arcs.emplace_back(ed.head, ed.tail);
        break;
      case EdgeClass::DummyII:
        arcs.emplace_back(ed.tail, ed.head);
        break;
    }
  }
  const internal::BlockDag dag = internal::make_block_dag(net, dec.blocks, arcs);

  constexpr std::size_t kMaxBasisCuts = 32;
  std::vector<std::vector<char>> sides;
  internal::enumerate_closed_sets(net, dag, kMaxBasisCuts,
                                  [&](const std::vector<char>& in_side) {
                                    sides.push_back(in_side);
                                    return true;
                                  });

  if (sides.empty()) {
    throw std::logic_error("sample_potential: no minimum cut found; "
                           "decomposition is inconsistent");
  }

  SplitMix64 rng(seed);
  const std::uint64_t denominator = 1 + rng.below(64);
  std::vector<std::uint64_t> counts(sides.size(), 0);
  for (std::uint64_t unit = 0; unit < denominator; ++unit) {
    ++counts[rng.below(sides.size())];
  }

  std::vector<Rational> values(static_cast<size_t>(net.vertex_count()), kZero);
  for (size_t i = 0; i < sides.size(); ++i) {
    if (counts[i] == 0) continue;
    const Rational weight(static_cast<std::int64_t>(counts[i]),
                          static_cast<std::int64_t>(denominator));
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
      if (sides[i][static_cast<size_t>(v)]) {
        values[static_cast<size_t>(v)] = values[static_cast<size_t>(v)] + weight;
      }
    }
  }

  PotentialValidation checked = validate_potential(net, dec, values);
  if (!checked.ok()) {
    throw std::logic_error("sample_potential: sampled combination failed "
                           "validation: " +
                           checked.violations.front().detail);
  }
  return *std::move(checked.potential);
}

std::vector<Rational> parse_potential_file(std::string_view text,
                                           VertexId vertex_count) {
  std::vector<std::optional<Rational>> assigned(
      static_cast<size_t>(vertex_count));
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;

    std::istringstream words{std::string(line)};
    std::string id_text, value_text, extra;
    if (!(words >> id_text >> value_text) || (words >> extra)) {
      throw PotentialParseError(line_no, "expected '<vertex-id> <num>/<den>'");
    }
    std::int64_t id = 0;
    try {
      size_t consumed = 0;
      id = std::stoll(id_text, &consumed);
      if (consumed != id_text.size()) throw std::invalid_argument(id_text);
    } catch (const std::exception&) {
      throw PotentialParseError(line_no, "vertex id is not an integer");
    }
    if (id < 1 || id > vertex_count) {
      throw PotentialParseError(line_no, "vertex id " + std::to_string(id) +
                                             " outside [1, " +
                                             std::to_string(vertex_count) + "]");
    }
    const std::optional<Rational> value = Rational::parse(value_text);
    if (!value.has_value()) {
      throw PotentialParseError(line_no,
                                "value must be '<num>/<den>' with den >= 1");
    }
    auto& slot = assigned[static_cast<size_t>(id - 1)];
    if (slot.has_value()) {
      throw PotentialParseError(line_no, "vertex " + std::to_string(id) +
                                             " assigned twice");
    }
    slot = value;
  }

  std::vector<Rational> values;
  values.reserve(assigned.size());
  for (size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i].has_value()) {
      throw PotentialParseError(
          0, "vertex " + std::to_string(i + 1) + " has no value");
    }
    values.push_back(*assigned[i]);
  }
  return values;
}

std::string serialize_potential(const std::vector<Rational>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    out << (i + 1) << ' ' << values[i].str() << '\n';
  }
  return out.str();
}

}  // namespace netdec
