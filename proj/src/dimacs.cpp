#include "netdec/dimacs.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace netdec {

const char* to_string(DimacsErrorCode code) {
  switch (code) {
    case DimacsErrorCode::MissingProblemLine: return "missing-problem-line";
    case DimacsErrorCode::DuplicateProblemLine: return "duplicate-problem-line";
    case DimacsErrorCode::BadProblemLine: return "bad-problem-line";
    case DimacsErrorCode::BadNodeLine: return "bad-node-line";
    case DimacsErrorCode::DuplicateSource: return "duplicate-source";
    case DimacsErrorCode::DuplicateSink: return "duplicate-sink";
    case DimacsErrorCode::MissingSource: return "missing-source";
    case DimacsErrorCode::MissingSink: return "missing-sink";
    case DimacsErrorCode::SourceEqualsSink: return "source-equals-sink";
    case DimacsErrorCode::BadArcLine: return "bad-arc-line";
    case DimacsErrorCode::ArcCountMismatch: return "arc-count-mismatch";
    case DimacsErrorCode::VertexOutOfRange: return "vertex-out-of-range";
    case DimacsErrorCode::SelfLoop: return "self-loop";
    case DimacsErrorCode::CapacityOutOfRange: return "capacity-out-of-range";
    case DimacsErrorCode::UnknownLineType: return "unknown-line-type";
  }
  return "unknown";
}

DimacsParseError::DimacsParseError(DimacsErrorCode code, int line, int column,
                                   const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ":" +
                         std::to_string(column) + ": [" + to_string(code) +
                         "] " + what),
      code_(code),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

bool parse_int(std::string_view text, std::int64_t& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

[[noreturn]] void fail(DimacsErrorCode code, int line, int column,
                       const std::string& what) {
  throw DimacsParseError(code, line, column, what);
}

}  // namespace

Network parse_dimacs(std::string_view text) {
  bool have_problem = false;
  std::int64_t n = 0, m = 0;
  std::int64_t source = -1, sink = -1;
  std::vector<Edge> edges;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    std::vector<Token> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string_view kind = tok[0].text;

    if (kind == "c") continue;

    if (kind == "p") {
      if (have_problem) {
        fail(DimacsErrorCode::DuplicateProblemLine, line_no, tok[0].column,
             "second problem line");
      }
      if (tok.size() != 4 || tok[1].text != "max") {
        fail(DimacsErrorCode::BadProblemLine, line_no, tok[0].column,
             "expected 'p max <vertices> <arcs>'");
      }
      constexpr std::int64_t kIdLimit = 1u << 30;
      if (!parse_int(tok[2].text, n) || n < 2 || n > kIdLimit) {
        fail(DimacsErrorCode::BadProblemLine, line_no, tok[2].column,
             "vertex count must be an integer in [2, 2^30]");
      }
      if (!parse_int(tok[3].text, m) || m < 0 || m > kIdLimit) {
        fail(DimacsErrorCode::BadProblemLine, line_no, tok[3].column,
             "arc count must be an integer in [0, 2^30]");
      }
      have_problem = true;
      continue;
    }

    if (!have_problem) {
      fail(DimacsErrorCode::MissingProblemLine, line_no, tok[0].column,
           "'" + std::string(kind) + "' line before problem line");
    }

    if (kind == "n") {
      if (tok.size() != 3 || (tok[2].text != "s" && tok[2].text != "t")) {
        fail(DimacsErrorCode::BadNodeLine, line_no, tok[0].column,
             "expected 'n <id> s' or 'n <id> t'");
      }
      std::int64_t id = 0;
      if (!parse_int(tok[1].text, id)) {
        fail(DimacsErrorCode::BadNodeLine, line_no, tok[1].column,
             "node id must be an integer");
      }
      if (id < 1 || id > n) {
        fail(DimacsErrorCode::VertexOutOfRange, line_no, tok[1].column,
             "node id " + std::to_string(id) + " outside [1, " +
                 std::to_string(n) + "]");
      }
      if (tok[2].text == "s") {
        if (source != -1) {
          fail(DimacsErrorCode::DuplicateSource, line_no, tok[0].column,
               "second source designation");
        }
        source = id;
      } else {
        if (sink != -1) {
          fail(DimacsErrorCode::DuplicateSink, line_no, tok[0].column,
               "second sink designation");
        }
        sink = id;
      }
      continue;
    }

    if (kind == "a") {
      if (tok.size() != 4) {
        fail(DimacsErrorCode::BadArcLine, line_no, tok[0].column,
             "expected 'a <tail> <head> <capacity>'");
      }
      std::int64_t tail = 0, head = 0, cap = 0;
      if (!parse_int(tok[1].text, tail)) {
        fail(DimacsErrorCode::BadArcLine, line_no, tok[1].column,
             "tail must be an integer");
      }
      if (!parse_int(tok[2].text, head)) {
        fail(DimacsErrorCode::BadArcLine, line_no, tok[2].column,
             "head must be an integer");
      }
      if (!parse_int(tok[3].text, cap)) {
        fail(DimacsErrorCode::BadArcLine, line_no, tok[3].column,
             "capacity must be an integer");
      }
      if (tail < 1 || tail > n) {
        fail(DimacsErrorCode::VertexOutOfRange, line_no, tok[1].column,
             "tail " + std::to_string(tail) + " outside [1, " +
                 std::to_string(n) + "]");
      }
      if (head < 1 || head > n) {
        fail(DimacsErrorCode::VertexOutOfRange, line_no, tok[2].column,
             "head " + std::to_string(head) + " outside [1, " +
                 std::to_string(n) + "]");
      }
      if (tail == head) {
        fail(DimacsErrorCode::SelfLoop, line_no, tok[1].column,
             "arc from vertex " + std::to_string(tail) + " to itself");
      }
      if (cap < 1 || cap > kMaxCapacity) {
        fail(DimacsErrorCode::CapacityOutOfRange, line_no, tok[3].column,
             "capacity must be in [1, 2^62]");
      }
      edges.push_back({static_cast<VertexId>(tail - 1),
                       static_cast<VertexId>(head - 1), cap});
      continue;
    }

    fail(DimacsErrorCode::UnknownLineType, line_no, tok[0].column,
         "unknown line type '" + std::string(kind) + "'");
  }

  if (!have_problem) {
    fail(DimacsErrorCode::MissingProblemLine, 0, 0, "no problem line found");
  }
  if (source == -1) {
    fail(DimacsErrorCode::MissingSource, 0, 0, "no 'n <id> s' line");
  }
  if (sink == -1) {
    fail(DimacsErrorCode::MissingSink, 0, 0, "no 'n <id> t' line");
  }
  if (source == sink) {
    fail(DimacsErrorCode::SourceEqualsSink, 0, 0,
         "source and sink designate the same vertex");
  }
  if (static_cast<std::int64_t>(edges.size()) != m) {
    fail(DimacsErrorCode::ArcCountMismatch, 0, 0,
         "problem line declares " + std::to_string(m) + " arcs, found " +
             std::to_string(edges.size()));
  }

  return Network(static_cast<VertexId>(n), static_cast<VertexId>(source - 1),
                 static_cast<VertexId>(sink - 1), std::move(edges));
}

std::string serialize_dimacs(const Network& net) {
  std::ostringstream out;
  out << "p max " << net.vertex_count() << ' ' << net.edge_count() << '\n';
  out << "n " << net.source() + 1 << " s\n";
  out << "n " << net.sink() + 1 << " t\n";
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    out << "a " << ed.tail + 1 << ' ' << ed.head + 1 << ' ' << ed.capacity
        << '\n';
  }
  return out.str();
}

}  // namespace netdec
