// Acceptance suite: runs every acceptance criterion over a fixed corpus of
// 300 seeded random networks plus the named fixtures, printing one PASS/FAIL
// line per criterion. Exits non-zero if any criterion fails.
//
// Usage: acceptance <path-to-netdec-cli> <tests-source-dir>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netdec/analysis.hpp"
#include "netdec/dimacs.hpp"
#include "netdec/maxflow.hpp"
#include "netdec/mincut.hpp"
#include "netdec/oracle.hpp"
#include "netdec/potential.hpp"
#include "test_networks.hpp"

using namespace netdec;

namespace {

struct Instance {
  Network net;
  MaxFlowResult result;
  Decomposition dec;
  OracleReport oracle;

  explicit Instance(Network n)
      : net(std::move(n)),
        result(max_flow(net)),
        dec(decompose(net, result.flow)),
        oracle(classify_by_enumeration(net)) {}
};

int failures = 0;

void report(int id, const std::string& name, bool pass,
            const std::string& detail, double seconds) {
  std::printf("%s  criterion %2d: %s (%.1f s)%s%s\n", pass ? "PASS" : "FAIL",
              id, name.c_str(), seconds,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <typename Body>
void criterion(int id, const std::string& name, Body body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(id, name, pass, detail, seconds);
}

bool source_reaches_sink(const Network& net) {
  std::vector<std::vector<VertexId>> adj(net.vertex_count());
  for (const Edge& e : net.edges()) adj[e.tail].push_back(e.head);
  std::vector<char> seen(net.vertex_count(), 0);
  std::queue<VertexId> queue;
  seen[net.source()] = 1;
  queue.push(net.source());
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    if (v == net.sink()) return true;
    for (VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push(w);
      }
    }
  }
  return false;
}

std::vector<std::vector<VertexId>> canonical_partition(
    std::vector<std::vector<VertexId>> blocks) {
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::set<std::vector<VertexId>> side_set(
    const std::vector<std::vector<VertexId>>& sides) {
  return {sides.begin(), sides.end()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  std::string output;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    output.append(buffer, got);
  }
  const int status = pclose(pipe);
  if (status != 0) {
    throw std::runtime_error("command failed (" + std::to_string(status) +
                             "): " + command);
  }
  return output;
}

std::vector<std::vector<VertexId>> all_subsets_with_source(const Network& net) {
  std::vector<VertexId> free;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (v != net.source() && v != net.sink()) free.push_back(v);
  }
  std::vector<std::vector<VertexId>> subsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<VertexId> side{net.source()};
    for (size_t i = 0; i < free.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) side.push_back(free[i]);
    }
    std::sort(side.begin(), side.end());
    subsets.push_back(std::move(side));
  }
  return subsets;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <netdec-cli> <tests-source-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string tests_dir = argv[2];

  std::cout << "building corpus (300 seeded networks)...\n";
  std::vector<Instance> corpus;
  corpus.reserve(300);
  {
    std::size_t connected = 0;
    for (const Network& net : testnets::corpus()) {
      corpus.emplace_back(net);
      if (source_reaches_sink(net)) ++connected;
    }
    std::cout << "corpus ready: " << corpus.size() << " instances, "
              << connected << " with a source-sink path\n";
  }

  criterion(1, "edge classes match the exhaustive oracle", [&](std::string& detail) {
    std::size_t connected = 0;
    for (const Instance& inst : corpus) {
      const auto n = inst.net.vertex_count();
      if (n < 4 || n > 8 || inst.net.edge_count() > 14) {
        detail = "corpus instance outside the size bounds";
        return false;
      }
      for (const Edge& e : inst.net.edges()) {
        if (e.capacity < 1 || e.capacity > 3) {
          detail = "corpus capacity outside {1,2,3}";
          return false;
        }
      }
      if (source_reaches_sink(inst.net)) ++connected;
      if (inst.dec.edge_class != inst.oracle.edge_class) {
        detail = "classification mismatch";
        return false;
      }
    }
    if (corpus.size() != 300 || connected < 200) {
      detail = "corpus shape: " + std::to_string(corpus.size()) +
               " instances, " + std::to_string(connected) + " connected";
      return false;
    }
    return true;
  });

  criterion(2, "minimum cut enumeration equals brute force", [&](std::string& detail) {
    for (const Instance& inst : corpus) {
      bool exhausted = false;
      const std::vector<MinCut> cuts = enumerate_min_cuts(
          inst.net, inst.result.flow, std::size_t{1} << 15, &exhausted);
      std::set<std::vector<VertexId>> enumerated;
      bool duplicate = false;
      for (const MinCut& cut : cuts) {
        duplicate |= !enumerated.insert(cut.source_side).second;
      }
      if (duplicate || !exhausted ||
          enumerated != side_set(inst.oracle.min_cut_sides)) {
        detail = "cut set mismatch";
        return false;
      }
    }
    return true;
  });

  criterion(3, "max-flow value equals minimum brute-force cut capacity",
            [&](std::string& detail) {
    for (const Instance& inst : corpus) {
      if (inst.result.value != inst.oracle.min_cut_capacity) {
        detail = "duality gap on an instance";
        return false;
      }
    }
    return true;
  });

  criterion(4, "block partition is identical across maximum flows",
            [&](std::string& detail) {
    for (const Instance& inst : corpus) {
      const auto reference = canonical_partition(inst.dec.blocks);
      for (const Flow& flow : enumerate_max_flows(inst.net, 10)) {
        if (canonical_partition(residual_sccs(inst.net, flow)) != reference) {
          detail = "partition changed under an alternative maximum flow";
          return false;
        }
      }
    }
    return true;
  });

  criterion(5, "cut unions recover the classes; sides are unions of blocks",
            [&](std::string& detail) {
    for (const Instance& inst : corpus) {
      std::set<EdgeId> cut_union, back_union;
      bool sides_ok = true;
      enumerate_min_cuts(inst.net, inst.result.flow, std::size_t{1} << 15,
                         [&](const MinCut& cut) {
        cut_union.insert(cut.cut_edges.begin(), cut.cut_edges.end());
        back_union.insert(cut.back_edges.begin(), cut.back_edges.end());
        std::vector<char> in_side(inst.net.vertex_count(), 0);
        for (VertexId v : cut.source_side) in_side[v] = 1;
        if (!in_side[inst.net.source()]) sides_ok = false;
        for (size_t b = 0; b < inst.dec.blocks.size(); ++b) {
          const auto& block = inst.dec.blocks[b];
          const char first = in_side[block.front()];
          for (VertexId v : block) {
            if (in_side[v] != first) sides_ok = false;
          }
        }
        return true;
      });
      for (EdgeId e = 0; e < inst.net.edge_count(); ++e) {
        const bool essential = inst.dec.edge_class[e] == EdgeClass::Essential;
        const bool dummy_ii = inst.dec.edge_class[e] == EdgeClass::DummyII;
        if (cut_union.count(e) != static_cast<size_t>(essential) ||
            back_union.count(e) != static_cast<size_t>(dummy_ii)) {
          detail = "union of cut edges disagrees with the classes";
          return false;
        }
      }
      if (!sides_ok) {
        detail = "a cut side is not a block union containing the start block";
        return false;
      }
    }
    return true;
  });

  criterion(6, "jumps agree with brute-force cut sides", [&](std::string& detail) {
    for (const Instance& inst : corpus) {
      const Network& net = inst.net;
      std::vector<std::vector<VertexId>> dummy_adj(net.vertex_count());
      for (EdgeId e = 0; e < net.edge_count(); ++e) {
        if (inst.dec.edge_class[e] != EdgeClass::Essential) {
          dummy_adj[net.edge(e).tail].push_back(net.edge(e).head);
        }
      }
      for (VertexId u = 0; u < net.vertex_count(); ++u) {
        std::vector<char> reach(net.vertex_count(), 0);
        std::queue<VertexId> queue;
        reach[u] = 1;
        queue.push(u);
        while (!queue.empty()) {
          const VertexId v = queue.front();
          queue.pop();
          for (VertexId w : dummy_adj[v]) {
            if (!reach[w]) {
              reach[w] = 1;
              queue.push(w);
            }
          }
        }
        for (VertexId v = 0; v < net.vertex_count(); ++v) {
          if (u == v || !reach[v]) continue;
          bool split = false;
          for (const auto& side : inst.oracle.min_cut_sides) {
            const bool u_in = std::binary_search(side.begin(), side.end(), u);
            const bool v_in = std::binary_search(side.begin(), side.end(), v);
            if (!u_in && v_in) split = true;
          }
          if (jump_exists(net, inst.dec.edge_class, u, v).exists != split) {
            detail = "jump predicate disagrees with the cuts";
            return false;
          }
        }
      }
    }
    return true;
  });

  criterion(7, "indicator potentials coincide with minimum cuts",
            [&](std::string& detail) {
    for (const Instance& inst : corpus) {
      for (const auto& side : all_subsets_with_source(inst.net)) {
        if (indicator_is_potential(inst.net, inst.dec, side) !=
            is_min_cut(inst.net, inst.result.flow, side)) {
          detail = "equivalence failed for a subset";
          return false;
        }
      }
    }
    return true;
  });

  criterion(8, "convex combinations and level decompositions round-trip",
            [&](std::string& detail) {
    for (size_t index = 0; index < corpus.size(); ++index) {
      const Instance& inst = corpus[index];
      const std::vector<MinCut> cuts =
          enumerate_min_cuts(inst.net, inst.result.flow, std::size_t{1} << 15);

      // (a) 50 seeded convex combinations, exact diff identity.
      testnets::TestRng rng(0xC0FFEE00ULL + index);
      for (int round = 0; round < 50; ++round) {
        const std::uint64_t denominator = 1 + rng.below(64);
        std::vector<std::uint64_t> counts(cuts.size(), 0);
        for (std::uint64_t unit = 0; unit < denominator; ++unit) {
          ++counts[rng.below(cuts.size())];
        }
        std::vector<Rational> weights;
        for (std::uint64_t count : counts) {
          weights.push_back(Rational(static_cast<std::int64_t>(count),
                                     static_cast<std::int64_t>(denominator)));
        }
        const Potential combined =
            combine_cuts(inst.net, inst.dec, cuts, weights);
        std::vector<Rational> expected(inst.net.edge_count(), Rational(0));
        for (size_t i = 0; i < cuts.size(); ++i) {
          for (EdgeId e : cuts[i].cut_edges) {
            expected[e] = expected[e] + weights[i];
          }
        }
        if (diff_star(inst.net, inst.dec, combined) != expected) {
          detail = "diff of a combination missed the weighted cut indicator";
          return false;
        }
      }

      // (b) level decomposition of 50 sampled potentials.
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Potential pot = sample_potential(inst.net, inst.dec, seed);
        const LevelDecomposition levels =
            level_decompose(inst.net, inst.dec, pot);
        if (levels.thresholds.empty() ||
            levels.thresholds.back() != Rational(1)) {
          detail = "thresholds do not end at 1";
          return false;
        }
        Rational weight_total(0);
        for (const Rational& w : levels.weights()) weight_total = weight_total + w;
        if (weight_total != Rational(1)) {
          detail = "level weights do not sum to 1";
          return false;
        }
        for (size_t k = 1; k < levels.thresholds.size(); ++k) {
          if (!(levels.thresholds[k - 1] < levels.thresholds[k])) {
            detail = "thresholds not strictly increasing";
            return false;
          }
        }
        for (const auto& side : levels.level_sets) {
          if (!is_min_cut(inst.net, inst.result.flow, side)) {
            detail = "a level set is not a minimum cut";
            return false;
          }
        }
        std::vector<Rational> rebuilt(inst.net.vertex_count(), Rational(0));
        const std::vector<Rational> weights = levels.weights();
        for (size_t k = 0; k < weights.size(); ++k) {
          for (VertexId v : levels.level_sets[k]) {
            rebuilt[v] = rebuilt[v] + weights[k];
          }
        }
        if (rebuilt != pot.values) {
          detail = "level reconstruction is not exact";
          return false;
        }
      }
    }
    return true;
  });

  criterion(9, "potentials are constant on blocks and certify duality",
            [&](std::string& detail) {
    for (const Instance& inst : corpus) {
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Potential pot = sample_potential(inst.net, inst.dec, seed);
        for (const auto& block : inst.dec.blocks) {
          for (VertexId v : block) {
            if (pot.at(v) != pot.at(block.front())) {
              detail = "potential varies inside a block";
              return false;
            }
          }
        }
        if (!check_dual_optimal(inst.net, inst.dec, pot, inst.result.value)) {
          detail = "dual value identity failed";
          return false;
        }
      }
    }
    return true;
  });

  criterion(10, "named fixtures match their frozen goldens",
            [&](std::string& detail) {
    const Network diamond =
        parse_dimacs(read_file(tests_dir + "/fixtures/diamond.max"));
    const Network n3 = parse_dimacs(read_file(tests_dir + "/fixtures/n3.max"));
    const Network n4 = parse_dimacs(read_file(tests_dir + "/fixtures/n4.max"));

    const Instance di(diamond), i3(n3), i4(n4);
    if (di.result.value != 2 || i3.result.value != 2 || i4.result.value != 2) {
      detail = "fixture flow value";
      return false;
    }
    if (di.dec.edge_class != std::vector<EdgeClass>(4, EdgeClass::Essential) ||
        side_set(di.oracle.min_cut_sides).size() != 4) {
      detail = "diamond facts";
      return false;
    }
    if (i3.dec.edge_class !=
            std::vector<EdgeClass>{EdgeClass::Essential, EdgeClass::Essential,
                                   EdgeClass::Essential, EdgeClass::Essential,
                                   EdgeClass::DummyI, EdgeClass::DummyI} ||
        i3.dec.block_type[i3.dec.block_of[1]] != BlockType::Transfer ||
        side_set(i3.oracle.min_cut_sides) !=
            std::set<std::vector<VertexId>>{{0}, {0, 1, 2}}) {
      detail = "n3 facts";
      return false;
    }
    if (i4.dec.edge_class[4] != EdgeClass::DummyII ||
        side_set(i4.oracle.min_cut_sides) !=
            std::set<std::vector<VertexId>>{{0}, {0, 2}, {0, 1, 2}}) {
      detail = "n4 facts";
      return false;
    }

    for (const std::string name : {"diamond", "n3", "n4"}) {
      const std::string expected =
          read_file(tests_dir + "/golden/" + name + ".analyze.json");
      const std::string command = "\"" + cli + "\" analyze \"" + tests_dir +
                                  "/fixtures/" + name +
                                  ".max\" --cuts-limit 64";
      if (run_command(command) != expected) {
        detail = name + " analyze output differs from the golden file";
        return false;
      }
    }
    return true;
  });

  criterion(11, "analyze output is byte-identical across runs",
            [&](std::string& detail) {
    AnalysisOptions options;
    options.cuts_limit = 64;
    for (const Instance& inst : corpus) {
      const std::string first = document_to_string(build_analysis(inst.net, options));
      const std::string second = document_to_string(build_analysis(inst.net, options));
      if (first != second) {
        detail = "document changed between runs";
        return false;
      }
    }
    const std::string command =
        "\"" + cli + "\" analyze \"" + tests_dir + "/fixtures/n3.max\"";
    if (run_command(command) != run_command(command)) {
      detail = "CLI output changed between runs";
      return false;
    }
    return true;
  });

  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria FAILED\n";
  return 1;
}
