#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "toggle/graph.hpp"

namespace toggle {

// Closed-neighbourhood weight sum. Throws InputError for an out-of-range v.
std::size_t sigma(const GamePosition& pos, Vertex v);

bool is_playable(const GamePosition& pos, Vertex v);
// Same test phrased through open neighbours: w(v) = 1 and at least
// ceil(deg/2) neighbours carry weight 1. Kept separately as a cross-check.
bool is_playable_by_degree(const GamePosition& pos, Vertex v);
// Ascending.
std::vector<Vertex> playable_set(const GamePosition& pos);

// Raw forms on packed weights, no range checks.
inline bool playable_bits(const Graph& g, const PackedBits& w, Vertex v) {
  return w.test(v) && 2 * w.count_and(g.closed_mask(v)) > g.degree(v) + 1;
}

// Throws RuleViolation if v is not playable.
GamePosition apply_move(const GamePosition& pos, Vertex v);

struct MoveTrace {
  std::vector<GamePosition> positions;
  std::vector<Vertex> moves;
};

// Throws RuleViolation at the first illegal move; the message names the stage.
MoveTrace replay(const GamePosition& pos, const std::vector<Vertex>& moves);

struct PlayabilityWitness {
  std::vector<Vertex> moves;
  Vertex vertex = 0;
};

struct PlayabilityReport {
  bool monotone = true;
  std::optional<PlayabilityWitness> witness;
};

struct EnumerationBudget {
  std::size_t max_vertices = 32;
  std::size_t max_states = std::size_t{1} << 24;
};

// Searches every play sequence from pos (up to max_depth moves) for a vertex
// that is unplayable at some stage and playable at a later one. The witness is
// a shortest such sequence: after `moves` the vertex is playable again.
// Throws ResourceError when the graph or the state set exceeds the budget.
PlayabilityReport check_unplayability_monotone(const GamePosition& pos, std::size_t max_depth,
                                               const EnumerationBudget& budget = {});

// Searches every play sequence from pos for a vertex v that is playable after
// some earlier move landed in N[v]. The stronger property is what
// penultimate unplayability promises on graphs of maximum degree 3.
PlayabilityReport check_never_replayable(const GamePosition& pos,
                                         const EnumerationBudget& budget = {});

// ---- small-graph enumeration -------------------------------------------------

// Certificate that is equal for two graphs iff they are isomorphic.
std::vector<std::uint8_t> canonical_certificate(const Graph& g);

// All connected graphs on n vertices with maximum degree <= max_degree, one
// per isomorphism class, in a deterministic order. Intended for n <= 10.
std::vector<Graph> connected_graphs(std::size_t n, std::size_t max_degree);

// Reference enumeration over all labelled edge sets. Only for tiny n.
std::vector<Graph> connected_graphs_bruteforce(std::size_t n, std::size_t max_degree);

}  // namespace toggle
