#include "closed_sets.hpp"

#include <algorithm>
#include <queue>

namespace netdec::internal {

BlockDag make_block_dag(const Network& net,
                        const std::vector<std::vector<VertexId>>& blocks,
                        const std::vector<std::pair<VertexId, VertexId>>& arcs) {
  BlockDag dag;
  dag.blocks = blocks;
  dag.block_of.assign(static_cast<size_t>(net.vertex_count()), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (VertexId v : blocks[b]) {
      dag.block_of[static_cast<size_t>(v)] = static_cast<int>(b);
    }
  }
  dag.succ.assign(blocks.size(), {});
  for (const auto& [from, to] : arcs) {
    const int bf = dag.block_of[static_cast<size_t>(from)];
    const int bt = dag.block_of[static_cast<size_t>(to)];
    if (bf != bt) dag.succ[static_cast<size_t>(bf)].push_back(bt);
  }
  for (auto& list : dag.succ) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  dag.source_block = dag.block_of[static_cast<size_t>(net.source())];
  dag.sink_block = dag.block_of[static_cast<size_t>(net.sink())];
  return dag;
}

bool enumerate_closed_sets(
    const Network& net, const BlockDag& dag, std::size_t limit,
    const std::function<bool(const std::vector<char>&)>& emit) {
  const size_t block_count = dag.blocks.size();

  // Mandatory: blocks reachable from the source block (the closure of {s}).
  enum class Membership : char { Out, In, Forced };
  std::vector<Membership> state(block_count, Membership::Out);
  {
    std::queue<int> queue;
    state[static_cast<size_t>(dag.source_block)] = Membership::Forced;
    queue.push(dag.source_block);
    while (!queue.empty()) {
      const int b = queue.front();
      queue.pop();
      for (int next : dag.succ[static_cast<size_t>(b)]) {
        if (state[static_cast<size_t>(next)] != Membership::Forced) {
          state[static_cast<size_t>(next)] = Membership::Forced;
          queue.push(next);
        }
      }
    }
  }

  // Forbidden: blocks that reach the sink block (closedness would drag the
  // sink in).
  std::vector<char> reaches_sink(block_count, 0);
  {
    std::vector<std::vector<int>> pred(block_count);
    for (size_t b = 0; b < block_count; ++b) {
      for (int next : dag.succ[b]) {
        pred[static_cast<size_t>(next)].push_back(static_cast<int>(b));
      }
    }
    std::queue<int> queue;
    reaches_sink[static_cast<size_t>(dag.sink_block)] = 1;
    queue.push(dag.sink_block);
    while (!queue.empty()) {
      const int b = queue.front();
      queue.pop();
      for (int p : pred[static_cast<size_t>(b)]) {
        if (!reaches_sink[static_cast<size_t>(p)]) {
          reaches_sink[static_cast<size_t>(p)] = 1;
          queue.push(p);
        }
      }
    }
  }

  // The remaining blocks are free. They are visited in reverse topological
  // order (the block order itself), so every successor of a block is decided
  // before the block: including is legal iff no successor is Out.
  std::vector<int> free_blocks;
  for (size_t b = 0; b < block_count; ++b) {
    if (state[b] != Membership::Forced && !reaches_sink[b]) {
      free_blocks.push_back(static_cast<int>(b));
    }
  }

  std::size_t emitted = 0;
  bool aborted = false;     // the consumer asked to stop
  bool over_limit = false;  // a closed set beyond `limit` exists

  auto emit_current = [&]() {
    if (emitted == limit) {
      over_limit = true;
      return;
    }
    std::vector<char> in_side(static_cast<size_t>(net.vertex_count()), 0);
    for (size_t b = 0; b < block_count; ++b) {
      if (state[b] != Membership::Out) {
        for (VertexId v : dag.blocks[b]) in_side[static_cast<size_t>(v)] = 1;
      }
    }
    ++emitted;
    if (!emit(in_side)) aborted = true;
  };

  std::function<void(size_t)> walk = [&](size_t idx) {
    if (aborted || over_limit) return;
    if (idx == free_blocks.size()) {
      emit_current();
      return;
    }
    const auto b = static_cast<size_t>(free_blocks[idx]);
    walk(idx + 1);
    if (aborted || over_limit) return;
    bool can_include = true;
    for (int next : dag.succ[b]) {
      if (state[static_cast<size_t>(next)] == Membership::Out) {
        can_include = false;
        break;
      }
    }
    if (can_include) {
      state[b] = Membership::In;
      walk(idx + 1);
      state[b] = Membership::Out;
    }
  };
  walk(0);

  return !aborted && !over_limit;
}

}  // namespace netdec::internal
