#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "netdec/decomposition.hpp"
#include "netdec/mincut.hpp"
#include "netdec/network.hpp"

namespace netdec {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

struct AnalysisOptions {
  /// When set, the document additionally carries up to this many enumerated
  /// minimum cuts plus an exhaustion flag.
  std::optional<std::size_t> cuts_limit;
};

/// Content hash of the canonicalized input ("fnv1a64:" + 16 hex digits).
/// Identical networks hash identically regardless of comment lines or
/// whitespace in the original file.
std::string input_digest(const Network& net);

/// Full analysis of one network as a canonical JSON document: fixed key
/// order, sorted lists, integers and "num/den" strings only. Byte-identical
/// across runs and platforms for the same input. Vertex ids in the document
/// are 1-based DIMACS ids; edge ids stay 0-based list positions.
nlohmann::ordered_json build_analysis(const Network& net,
                                      const AnalysisOptions& options = {});

/// Canonical bytes of a document: two-space indentation plus one trailing
/// newline.
std::string document_to_string(const nlohmann::ordered_json& doc);

nlohmann::ordered_json cut_to_json(const MinCut& cut);

/// Graphviz rendering: residual blocks as clusters labeled with their type,
/// edges colored red (essential), black (dummy I), green (dummy II) and
/// labeled "flow/capacity".
std::string emit_dot(const Decomposition& dec, const Network& net,
                     const Flow& flow);

}  // namespace netdec
