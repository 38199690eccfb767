#include <doctest.h>

#include "netdec/dimacs.hpp"
#include "test_networks.hpp"

using namespace netdec;

namespace {

DimacsErrorCode code_of(const std::string& text) {
  try {
    parse_dimacs(text);
  } catch (const DimacsParseError& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return DimacsErrorCode::UnknownLineType;
}

}  // namespace

TEST_CASE("parse_dimacs reads the single-edge example") {
  const Network net = parse_dimacs(
      "c tiny instance\n"
      "p max 2 1\n"
      "n 1 s\n"
      "n 2 t\n"
      "a 1 2 5\n");
  CHECK(net.vertex_count() == 2);
  CHECK(net.source() == 0);
  CHECK(net.sink() == 1);
  REQUIRE(net.edge_count() == 1);
  CHECK(net.edge(0) == Edge{0, 1, 5});
}

TEST_CASE("parse_dimacs tolerates comments, blank lines and extra spaces") {
  const Network net = parse_dimacs(
      "c comment\n\np max 3 2\nc more\nn 1 s\n  n 3 t\na 1 2 4\na  2  3  7\n");
  CHECK(net.vertex_count() == 3);
  CHECK(net.edge(1) == Edge{1, 2, 7});
}

TEST_CASE("parse_dimacs diagnostic codes") {
  CHECK(code_of("p max 2 1\np max 2 1\nn 1 s\nn 2 t\na 1 2 1\n") ==
        DimacsErrorCode::DuplicateProblemLine);
  CHECK(code_of("p min 2 1\n") == DimacsErrorCode::BadProblemLine);
  CHECK(code_of("p max 2\n") == DimacsErrorCode::BadProblemLine);
  CHECK(code_of("n 1 s\np max 2 0\nn 2 t\n") ==
        DimacsErrorCode::MissingProblemLine);
  CHECK(code_of("p max 2 0\nn 1 s\nn 1 x\n") == DimacsErrorCode::BadNodeLine);
  CHECK(code_of("p max 2 0\nn 1 s\nn 2 s\nn 2 t\n") ==
        DimacsErrorCode::DuplicateSource);
  CHECK(code_of("p max 2 0\nn 1 s\nn 2 t\nn 2 t\n") ==
        DimacsErrorCode::DuplicateSink);
  CHECK(code_of("p max 2 0\nn 2 t\n") == DimacsErrorCode::MissingSource);
  CHECK(code_of("p max 2 0\nn 1 s\n") == DimacsErrorCode::MissingSink);
  CHECK(code_of("p max 2 0\nn 1 s\nn 1 t\n") ==
        DimacsErrorCode::SourceEqualsSink);
  CHECK(code_of("p max 2 1\nn 1 s\nn 2 t\na 1 2\n") ==
        DimacsErrorCode::BadArcLine);
  CHECK(code_of("p max 2 1\nn 1 s\nn 2 t\na 1 2 1\na 1 2 1\n") ==
        DimacsErrorCode::ArcCountMismatch);
  CHECK(code_of("p max 2 1\nn 1 s\nn 2 t\na 1 3 1\n") ==
        DimacsErrorCode::VertexOutOfRange);
  CHECK(code_of("p max 3 1\nn 1 s\nn 4 t\na 1 2 1\n") ==
        DimacsErrorCode::VertexOutOfRange);
  CHECK(code_of("p max 2 1\nn 1 s\nn 2 t\na 1 1 3\n") ==
        DimacsErrorCode::SelfLoop);
  CHECK(code_of("p max 2 1\nn 1 s\nn 2 t\na 1 2 0\n") ==
        DimacsErrorCode::CapacityOutOfRange);
  CHECK(code_of("p max 2 1\nn 1 s\nn 2 t\na 1 2 4611686018427387905\n") ==
        DimacsErrorCode::CapacityOutOfRange);
  CHECK(code_of("p max 2 1\nn 1 s\nn 2 t\nq 1 2 1\n") ==
        DimacsErrorCode::UnknownLineType);
}

TEST_CASE("parse errors carry line and column anchors") {
  try {
    parse_dimacs("p max 2 1\nn 1 s\nn 2 t\na 1 2 0\n");
    FAIL("expected a parse error");
  } catch (const DimacsParseError& e) {
    CHECK(e.code() == DimacsErrorCode::CapacityOutOfRange);
    CHECK(e.line() == 4);
    CHECK(e.column() == 7);
    CHECK(std::string(e.what()).find("capacity") != std::string::npos);
  }
}

TEST_CASE("serialize then parse is the identity on the network model") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Network net = testnets::random_network(seed, seed % 3 != 2);
    const std::string text = serialize_dimacs(net);
    const Network reparsed = parse_dimacs(text);
    CHECK(reparsed.vertex_count() == net.vertex_count());
    CHECK(reparsed.source() == net.source());
    CHECK(reparsed.sink() == net.sink());
    CHECK(reparsed.edges() == net.edges());
    // parse -> serialize -> parse is a fixed point.
    CHECK(serialize_dimacs(reparsed) == text);
  }
}
