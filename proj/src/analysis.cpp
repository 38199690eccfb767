#include "netdec/analysis.hpp"

#include <iomanip>
#include <sstream>

#include "netdec/dimacs.hpp"
#include "netdec/maxflow.hpp"

namespace netdec {

namespace {

nlohmann::ordered_json vertices_to_json(const std::vector<VertexId>& vertices) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (VertexId v : vertices) array.push_back(v + 1);
  return array;
}

}  // namespace

std::string input_digest(const Network& net) {
  const std::string canonical = serialize_dimacs(net);
  std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a 64
  for (unsigned char byte : canonical) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

nlohmann::ordered_json cut_to_json(const MinCut& cut) {
  nlohmann::ordered_json doc;
  doc["source_side"] = vertices_to_json(cut.source_side);
  doc["cut_edges"] = cut.cut_edges;
  doc["back_edges"] = cut.back_edges;
  doc["capacity"] = cut.capacity;
  return doc;
}

nlohmann::ordered_json build_analysis(const Network& net,
                                      const AnalysisOptions& options) {
  const MaxFlowResult result = max_flow(net);
  const Decomposition dec = decompose(net, result.flow);

  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["input_digest"] = input_digest(net);
  doc["network"] = {
      {"vertex_count", net.vertex_count()},
      {"edge_count", net.edge_count()},
      {"source", net.source() + 1},
      {"sink", net.sink() + 1},
  };
  doc["max_flow_value"] = result.value;

  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    edges.push_back({
        {"id", e},
        {"tail", ed.tail + 1},
        {"head", ed.head + 1},
        {"capacity", ed.capacity},
        {"flow", result.flow.on(e)},
        {"class", to_string(dec.edge_class[static_cast<size_t>(e)])},
    });
  }
  doc["edges"] = std::move(edges);

  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (size_t b = 0; b < dec.blocks.size(); ++b) {
    blocks.push_back({
        {"id", b},
        {"members", vertices_to_json(dec.blocks[b])},
        {"type", to_string(dec.block_type[b])},
    });
  }
  doc["blocks"] = std::move(blocks);

  doc["minimal_cut"] = cut_to_json(minimal_min_cut(net, result.flow));
  doc["maximal_cut"] = cut_to_json(maximal_min_cut(net, result.flow));

  if (options.cuts_limit.has_value()) {
    bool exhausted = false;
    const std::vector<MinCut> cuts =
        enumerate_min_cuts(net, result.flow, *options.cuts_limit, &exhausted);
    nlohmann::ordered_json listing;
    listing["limit"] = *options.cuts_limit;
    listing["exhausted"] = exhausted;
    listing["count"] = cuts.size();
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const MinCut& cut : cuts) array.push_back(cut_to_json(cut));
    listing["cuts"] = std::move(array);
    doc["cuts"] = std::move(listing);
  }
  return doc;
}

std::string document_to_string(const nlohmann::ordered_json& doc) {
  return doc.dump(2) + "\n";
}

std::string emit_dot(const Decomposition& dec, const Network& net,
                     const Flow& flow) {
  std::ostringstream out;
  out << "digraph network {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (size_t b = 0; b < dec.blocks.size(); ++b) {
    out << "  subgraph cluster_" << b << " {\n";
    out << "    label=\"" << to_string(dec.block_type[b]) << "\";\n";
    for (VertexId v : dec.blocks[b]) {
      out << "    v" << v + 1 << " [label=\"" << v + 1 << "\"";
      if (v == net.source() || v == net.sink()) {
        out << " shape=doublecircle";
      }
      out << "];\n";
    }
    out << "  }\n";
  }
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    const char* color = "black";
    switch (dec.edge_class[static_cast<size_t>(e)]) {
      case EdgeClass::Essential: color = "red"; break;
      case EdgeClass::DummyI: color = "black"; break;
      case EdgeClass::DummyII: color = "green"; break;
    }
    out << "  v" << ed.tail + 1 << " -> v" << ed.head + 1 << " [color="
        << color << " label=\"" << flow.on(e) << "/" << ed.capacity << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace netdec
