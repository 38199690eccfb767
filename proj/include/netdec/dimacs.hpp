#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "netdec/network.hpp"

namespace netdec {

enum class DimacsErrorCode : std::uint8_t {
  MissingProblemLine,
  DuplicateProblemLine,
  BadProblemLine,
  BadNodeLine,
  DuplicateSource,
  DuplicateSink,
  MissingSource,
  MissingSink,
  SourceEqualsSink,
  BadArcLine,
  ArcCountMismatch,
  VertexOutOfRange,
  SelfLoop,
  CapacityOutOfRange,
  UnknownLineType,
};

const char* to_string(DimacsErrorCode code);

class DimacsParseError : public std::runtime_error {
 public:
  DimacsParseError(DimacsErrorCode code, int line, int column, const std::string& what);

  DimacsErrorCode code() const { return code_; }
  int line() const { return line_; }      ///< 1-based; 0 for whole-file errors
  int column() const { return column_; }  ///< 1-based; 0 when not applicable

 private:
  DimacsErrorCode code_;
  int line_;
  int column_;
};

/// Parses the DIMACS max-flow format:
///   c <comment>
///   p max <vertices> <arcs>
///   n <id> s           (exactly one)
///   n <id> t           (exactly one)
///   a <tail> <head> <capacity>
/// Vertex ids are 1-based in the file and mapped to 0-based internally; arc
/// order defines edge ids. Every malformed input raises a DimacsParseError
/// with a distinct code and the offending line/column.
Network parse_dimacs(std::string_view text);

/// Canonical serialization: problem line, source line, sink line, then arcs
/// in edge-id order. parse_dimacs(serialize_dimacs(net)) reproduces the
/// network exactly.
std::string serialize_dimacs(const Network& net);

}  // namespace netdec
