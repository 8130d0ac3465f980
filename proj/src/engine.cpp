#include "toggle/engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "toggle/errors.hpp"

namespace toggle {

namespace {

void check_vertex(const GamePosition& pos, Vertex v) {
  if (v >= pos.graph().vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range for a graph with " +
                     std::to_string(pos.graph().vertex_count()) + " vertices");
}

}  // namespace

std::size_t sigma(const GamePosition& pos, Vertex v) {
  check_vertex(pos, v);
  return pos.weights().count_and(pos.graph().closed_mask(v));
}

bool is_playable(const GamePosition& pos, Vertex v) {
  check_vertex(pos, v);
  if (!pos.weight(v)) return false;
  // flipping N[v] turns s ones into |N[v]| - s ones
  const std::size_t before = sigma(pos, v);
  const std::size_t after = pos.graph().degree(v) + 1 - before;
  return after < before;
}

bool is_playable_by_degree(const GamePosition& pos, Vertex v) {
  check_vertex(pos, v);
  if (!pos.weight(v)) return false;
  std::size_t k = 0;
  for (Vertex u : pos.graph().neighbors(v)) k += pos.weight(u) ? 1 : 0;
  const std::size_t deg = pos.graph().degree(v);
  return k >= (deg + 1) / 2;
}

std::vector<Vertex> playable_set(const GamePosition& pos) {
  std::vector<Vertex> out;
  const auto& g = pos.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (playable_bits(g, pos.weights(), v)) out.push_back(v);
  return out;
}

GamePosition apply_move(const GamePosition& pos, Vertex v) {
  check_vertex(pos, v);
  if (!is_playable(pos, v)) {
    const std::size_t before = sigma(pos, v);
    const std::size_t after = pos.graph().degree(v) + 1 - before;
    throw RuleViolation("illegal move at vertex " + std::to_string(v) + ": weight " +
                        (pos.weight(v) ? "1" : "0") + ", sigma " + std::to_string(before) +
                        " -> " + std::to_string(after));
  }
  WeightAssignment w = pos.weights();
  w ^= pos.graph().closed_mask(v);
  return pos.with_weights(std::move(w));
}

MoveTrace replay(const GamePosition& pos, const std::vector<Vertex>& moves) {
  MoveTrace trace;
  trace.positions.push_back(pos);
  for (std::size_t t = 0; t < moves.size(); ++t) {
    try {
      trace.positions.push_back(apply_move(trace.positions.back(), moves[t]));
    } catch (const RuleViolation& e) {
      throw RuleViolation("stage " + std::to_string(t) + ": " + e.what());
    }
    trace.moves.push_back(moves[t]);
  }
  return trace;
}

// ---- play-DAG searches -------------------------------------------------------

namespace {

struct SmallGraph {
  std::size_t n = 0;
  std::vector<std::uint64_t> closed;
  std::vector<int> half;  // |N[v]| / 2 rounded down; playable iff popcount > half

  explicit SmallGraph(const Graph& g) : n(g.vertex_count()), closed(n), half(n) {
    for (Vertex v = 0; v < n; ++v) {
      closed[v] = g.closed_mask(v).word(0);
      half[v] = static_cast<int>((g.degree(v) + 1) / 2);
    }
  }

  std::uint64_t playable(std::uint64_t w) const {
    std::uint64_t out = 0;
    for (std::uint64_t rest = w; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (std::popcount(w & closed[v]) > half[v]) out |= std::uint64_t{1} << v;
    }
    return out;
  }
};

struct StateKey {
  std::uint64_t w;
  std::uint64_t mark;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = k.w * 0x9E3779B97F4A7C15ULL;
    h ^= k.mark + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// Breadth-first search over (weights, mark). `next_mark` computes the mark of
// a successor, `bad` the set of violating vertices at a state.
template <class NextMark, class Bad>
PlayabilityReport search_play_dag(const GamePosition& pos, std::size_t max_depth,
                                  const EnumerationBudget& budget, std::uint64_t initial_mark,
                                  NextMark next_mark, Bad bad) {
  const auto n = pos.graph().vertex_count();
  if (n > budget.max_vertices || n > 64)
    throw ResourceError("play-sequence enumeration limited to " +
                        std::to_string(std::min<std::size_t>(budget.max_vertices, 64)) +
                        " vertices, graph has " + std::to_string(n));
  const SmallGraph g(pos.graph());
  const std::uint64_t w0 = n == 0 ? 0 : pos.weights().word(0);

  struct Node {
    StateKey key;
    std::size_t parent;
    Vertex move;
    std::size_t depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<StateKey, std::size_t, StateKeyHash> seen;
  nodes.push_back({{w0, initial_mark}, static_cast<std::size_t>(-1), 0, 0});
  seen.emplace(nodes[0].key, 0);

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Node cur = nodes[head];
    const std::uint64_t play = g.playable(cur.key.w);
    const std::uint64_t violators = bad(cur.key, play);
    if (violators != 0) {
      PlayabilityWitness wit;
      wit.vertex = static_cast<Vertex>(std::countr_zero(violators));
      for (std::size_t i = head; nodes[i].parent != static_cast<std::size_t>(-1); i = nodes[i].parent)
        wit.moves.push_back(nodes[i].move);
      std::reverse(wit.moves.begin(), wit.moves.end());
      return {false, std::move(wit)};
    }
    if (cur.depth >= max_depth) continue;
    for (std::uint64_t rest = play; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint64_t w = cur.key.w ^ g.closed[v];
      const StateKey key{w, next_mark(cur.key, v, play)};
      if (seen.emplace(key, nodes.size()).second) {
        if (nodes.size() >= budget.max_states)
          throw ResourceError("play-sequence enumeration exceeded " +
                              std::to_string(budget.max_states) + " states");
        nodes.push_back({key, head, static_cast<Vertex>(v), cur.depth + 1});
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace

PlayabilityReport check_unplayability_monotone(const GamePosition& pos, std::size_t max_depth,
                                               const EnumerationBudget& budget) {
  const auto n = pos.graph().vertex_count();
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  // mark = vertices unplayable at some stage strictly before the current one
  return search_play_dag(
      pos, max_depth, budget, 0,
      [all](const StateKey& from, int, std::uint64_t play) { return from.mark | (all & ~play); },
      [](const StateKey& k, std::uint64_t play) { return k.mark & play; });
}

PlayabilityReport check_never_replayable(const GamePosition& pos, const EnumerationBudget& budget) {
  const auto n = pos.graph().vertex_count();
  if (n > 64) throw ResourceError("play-sequence enumeration limited to 64 vertices");
  std::vector<std::uint64_t> closed(n);
  for (Vertex v = 0; v < n; ++v) closed[v] = pos.graph().closed_mask(v).word(0);
  return search_play_dag(
      pos, n, budget, 0,
      [&](const StateKey& from, int v, std::uint64_t) { return from.mark | closed[v]; },
      [](const StateKey& k, std::uint64_t play) { return k.mark & play; });
}

}  // namespace toggle
