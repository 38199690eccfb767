#include "netdec/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "netdec/analysis.hpp"
#include "netdec/dimacs.hpp"
#include "netdec/maxflow.hpp"
#include "netdec/oracle.hpp"
#include "netdec/potential.hpp"

namespace netdec {

namespace {

class FileReadError : public std::runtime_error {
 public:
  explicit FileReadError(const std::string& what) : std::runtime_error(what) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileReadError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Network load_network(const std::string& path) {
  return parse_dimacs(read_file(path));
}

int cmd_analyze(const std::string& path, std::optional<std::size_t> cuts_limit,
                std::ostream& out) {
  AnalysisOptions options;
  options.cuts_limit = cuts_limit;
  out << document_to_string(build_analysis(load_network(path), options));
  return kExitOk;
}

int cmd_maxflow(const std::string& path, std::ostream& out) {
  const Network net = load_network(path);
  const MaxFlowResult result = max_flow(net);
  out << "value " << result.value << "\n";
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    out << "f " << ed.tail + 1 << ' ' << ed.head + 1 << ' ' << result.flow.on(e)
        << "\n";
  }
  return kExitOk;
}

int cmd_cuts(const std::string& path, std::size_t limit, bool minimal_only,
             bool maximal_only, std::ostream& out) {
  const Network net = load_network(path);
  const MaxFlowResult result = max_flow(net);
  if (minimal_only) {
    out << cut_to_json(minimal_min_cut(net, result.flow)).dump() << "\n";
    return kExitOk;
  }
  if (maximal_only) {
    out << cut_to_json(maximal_min_cut(net, result.flow)).dump() << "\n";
    return kExitOk;
  }
  std::size_t count = 0;
  const bool exhausted =
      enumerate_min_cuts(net, result.flow, limit, [&](const MinCut& cut) {
        out << cut_to_json(cut).dump() << "\n";
        ++count;
        return true;
      });
  nlohmann::ordered_json summary;
  summary["exhausted"] = exhausted;
  summary["count"] = count;
  out << summary.dump() << "\n";
  return kExitOk;
}

int cmd_jump(const std::string& path, std::int64_t u, std::int64_t v,
             std::ostream& out, std::ostream& err) {
  const Network net = load_network(path);
  if (u < 1 || u > net.vertex_count() || v < 1 || v > net.vertex_count()) {
    err << "jump: vertex ids must be in [1, " << net.vertex_count() << "]\n";
    return kExitUsage;
  }
  const MaxFlowResult result = max_flow(net);
  const Decomposition dec = decompose(net, result.flow);
  const JumpResult jump =
      jump_exists(net, dec.edge_class, static_cast<VertexId>(u - 1),
                  static_cast<VertexId>(v - 1));
  nlohmann::ordered_json doc;
  doc["from"] = u;
  doc["to"] = v;
  doc["jump"] = jump.exists;
  if (jump.exists) {
    doc["witness_edges"] = jump.path_edges;
    nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
    vertices.push_back(u);
    for (EdgeId e : jump.path_edges) vertices.push_back(net.edge(e).head + 1);
    doc["witness_vertices"] = std::move(vertices);
  }
  out << doc.dump() << "\n";
  return kExitOk;
}

int cmd_potential_validate(const std::string& path, const std::string& pi_path,
                           std::ostream& out) {
  const Network net = load_network(path);
  const std::vector<Rational> values =
      parse_potential_file(read_file(pi_path), net.vertex_count());
  const MaxFlowResult result = max_flow(net);
  const Decomposition dec = decompose(net, result.flow);
  const PotentialValidation validation = validate_potential(net, dec, values);
  if (validation.ok()) {
    out << "valid\n";
    return kExitOk;
  }
  for (const PotentialViolation& violation : validation.violations) {
    out << "violation: " << violation.detail << "\n";
  }
  return kExitCheckFailed;
}

int cmd_potential_sample(const std::string& path, std::uint64_t seed,
                         std::ostream& out) {
  const Network net = load_network(path);
  const MaxFlowResult result = max_flow(net);
  const Decomposition dec = decompose(net, result.flow);
  out << serialize_potential(sample_potential(net, dec, seed).values);
  return kExitOk;
}

int cmd_potential_decompose(const std::string& path, const std::string& pi_path,
                            std::ostream& out) {
  const Network net = load_network(path);
  const std::vector<Rational> values =
      parse_potential_file(read_file(pi_path), net.vertex_count());
  const MaxFlowResult result = max_flow(net);
  const Decomposition dec = decompose(net, result.flow);
  const PotentialValidation validation = validate_potential(net, dec, values);
  if (!validation.ok()) {
    for (const PotentialViolation& violation : validation.violations) {
      out << "violation: " << violation.detail << "\n";
    }
    return kExitCheckFailed;
  }
  const LevelDecomposition levels =
      level_decompose(net, dec, *validation.potential);
  nlohmann::ordered_json doc;
  nlohmann::ordered_json thresholds = nlohmann::ordered_json::array();
  for (const Rational& t : levels.thresholds) thresholds.push_back(t.str());
  doc["thresholds"] = std::move(thresholds);
  nlohmann::ordered_json weights = nlohmann::ordered_json::array();
  for (const Rational& w : levels.weights()) weights.push_back(w.str());
  doc["weights"] = std::move(weights);
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (const auto& level : levels.level_sets) {
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (VertexId v : level) members.push_back(v + 1);
    sets.push_back(std::move(members));
  }
  doc["level_sets"] = std::move(sets);
  out << document_to_string(doc);
  return kExitOk;
}

int cmd_export_dot(const std::string& path, std::ostream& out) {
  const Network net = load_network(path);
  const MaxFlowResult result = max_flow(net);
  const Decomposition dec = decompose(net, result.flow);
  out << emit_dot(dec, net, result.flow);
  return kExitOk;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  const Network net = load_network(path);
  const MaxFlowResult result = max_flow(net);
  const Decomposition dec = decompose(net, result.flow);
  const OracleReport oracle = classify_by_enumeration(net);

  bool all_ok = true;
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    if (ok) {
      out << "ok " << name << "\n";
    } else {
      out << "MISMATCH " << name << (detail.empty() ? "" : ": " + detail)
          << "\n";
      all_ok = false;
    }
  };

  check("flow-cut-duality", result.value == oracle.min_cut_capacity,
        "solver value " + std::to_string(result.value) +
            " vs brute-force cut capacity " +
            std::to_string(oracle.min_cut_capacity));

  check("edge-classes", dec.edge_class == oracle.edge_class, "");

  {
    std::set<std::vector<VertexId>> enumerated;
    bool duplicates = false;
    enumerate_min_cuts(net, result.flow, 1u << 15, [&](const MinCut& cut) {
      duplicates |= !enumerated.insert(cut.source_side).second;
      return true;
    });
    const std::set<std::vector<VertexId>> brute(oracle.min_cut_sides.begin(),
                                                oracle.min_cut_sides.end());
    check("min-cut-sides", !duplicates && enumerated == brute,
          std::to_string(enumerated.size()) + " enumerated vs " +
              std::to_string(brute.size()) + " brute-force");
  }

  {
    bool stable = true;
    const auto canonical = [](std::vector<std::vector<VertexId>> blocks) {
      std::sort(blocks.begin(), blocks.end());
      return blocks;
    };
    const auto reference = canonical(dec.blocks);
    for (const Flow& flow : enumerate_max_flows(net, 10)) {
      if (canonical(residual_sccs(net, flow)) != reference) stable = false;
    }
    check("block-flow-invariance", stable, "");
  }

  {
    std::set<EdgeId> cut_union, back_union;
    enumerate_min_cuts(net, result.flow, 1u << 15, [&](const MinCut& cut) {
      cut_union.insert(cut.cut_edges.begin(), cut.cut_edges.end());
      back_union.insert(cut.back_edges.begin(), cut.back_edges.end());
      return true;
    });
    std::set<EdgeId> essential, dummy_ii;
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      if (dec.edge_class[static_cast<size_t>(e)] == EdgeClass::Essential) {
        essential.insert(e);
      } else if (dec.edge_class[static_cast<size_t>(e)] == EdgeClass::DummyII) {
        dummy_ii.insert(e);
      }
    }
    check("cut-union-essential", cut_union == essential, "");
    check("cut-union-dummy-ii", back_union == dummy_ii, "");
  }

  {
    const Potential pot = sample_potential(net, dec, 0);
    bool constant_on_blocks = true;
    for (const auto& block : dec.blocks) {
      for (VertexId v : block) {
        if (pot.at(v) != pot.at(block.front())) constant_on_blocks = false;
      }
    }
    check("potential-duality",
          constant_on_blocks && check_dual_optimal(net, dec, pot, result.value),
          "");
  }

  return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"maximum-flow decomposition toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::string pi_file;
  std::size_t cuts_limit_analyze = 0;
  bool analyze_has_limit = false;
  std::size_t cuts_limit = 256;
  bool minimal_only = false, maximal_only = false;
  std::int64_t jump_u = 0, jump_v = 0;
  std::uint64_t seed = 0;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full decomposition report as canonical JSON");
  analyze->add_option("file", file, "DIMACS max-flow input")->required();
  analyze
      ->add_option("--cuts-limit", cuts_limit_analyze,
                   "also enumerate up to N minimum cuts")
      ->check(CLI::PositiveNumber);

  CLI::App* maxflow_cmd =
      app.add_subcommand("maxflow", "maximum flow value and per-edge flows");
  maxflow_cmd->add_option("file", file, "DIMACS max-flow input")->required();

  CLI::App* cuts = app.add_subcommand(
      "cuts", "enumerate minimum cuts as newline-delimited JSON");
  cuts->add_option("file", file, "DIMACS max-flow input")->required();
  cuts->add_option("--limit", cuts_limit, "stop after N cuts (default 256)")
      ->check(CLI::PositiveNumber);
  CLI::Option* minimal_flag =
      cuts->add_flag("--minimal", minimal_only, "only the inclusion-minimal cut");
  cuts->add_flag("--maximal", maximal_only, "only the inclusion-maximal cut")
      ->excludes(minimal_flag);

  CLI::App* jump = app.add_subcommand(
      "jump", "dummy-only path from u to v crossing a dummy II edge");
  jump->add_option("file", file, "DIMACS max-flow input")->required();
  jump->add_option("u", jump_u, "path start (1-based)")->required();
  jump->add_option("v", jump_v, "path end (1-based)")->required();

  CLI::App* potential =
      app.add_subcommand("potential", "potential-function operations");
  potential->require_subcommand(1);
  CLI::App* pot_validate = potential->add_subcommand(
      "validate", "check a potential file against the network");
  pot_validate->add_option("file", file, "DIMACS max-flow input")->required();
  pot_validate->add_option("pifile", pi_file, "potential file")->required();
  CLI::App* pot_sample = potential->add_subcommand(
      "sample", "emit a seeded random potential in file format");
  pot_sample->add_option("file", file, "DIMACS max-flow input")->required();
  pot_sample->add_option("--seed", seed, "sampling seed (default 0)");
  CLI::App* pot_decompose = potential->add_subcommand(
      "decompose", "split a potential into weighted minimum-cut levels");
  pot_decompose->add_option("file", file, "DIMACS max-flow input")->required();
  pot_decompose->add_option("pifile", pi_file, "potential file")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check the fast path against brute-force enumeration");
  verify->add_option("file", file, "DIMACS max-flow input")->required();

  CLI::App* export_dot =
      app.add_subcommand("export-dot", "Graphviz rendering of the decomposition");
  export_dot->add_option("file", file, "DIMACS max-flow input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  analyze_has_limit = analyze->count("--cuts-limit") > 0;

  try {
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(file,
                         analyze_has_limit
                             ? std::optional<std::size_t>(cuts_limit_analyze)
                             : std::nullopt,
                         out);
    }
    if (app.got_subcommand(maxflow_cmd)) return cmd_maxflow(file, out);
    if (app.got_subcommand(cuts)) {
      return cmd_cuts(file, cuts_limit, minimal_only, maximal_only, out);
    }
    if (app.got_subcommand(jump)) return cmd_jump(file, jump_u, jump_v, out, err);
    if (app.got_subcommand(potential)) {
      if (potential->got_subcommand(pot_validate)) {
        return cmd_potential_validate(file, pi_file, out);
      }
      if (potential->got_subcommand(pot_sample)) {
        return cmd_potential_sample(file, seed, out);
      }
      return cmd_potential_decompose(file, pi_file, out);
    }
    if (app.got_subcommand(verify)) return cmd_verify(file, out);
    if (app.got_subcommand(export_dot)) return cmd_export_dot(file, out);
    err << "unknown subcommand\n";
    return kExitUsage;
  } catch (const FileReadError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const DimacsParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const PotentialParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const SizeGuardError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace netdec
