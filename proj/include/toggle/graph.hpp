#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toggle/bits.hpp"

namespace toggle {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using WeightAssignment = PackedBits;

// Simple undirected graph with optional per-vertex role labels. Immutable once
// built; use GraphBuilder to assemble one incrementally.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  // Throws InputError on self-loops, duplicate edges or out-of-range indices.
  Graph(std::size_t vertex_count, std::span<const Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;
  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  // Empty string when the vertex carries no label.
  const std::string& label(Vertex v) const;

  // N[v] as a bit mask over all vertices.
  const PackedBits& closed_mask(Vertex v) const { return closed_[v]; }

  // Connected components, each sorted ascending, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  // Induced subgraph; vertex k of the result is vertices[k]. Labels carried over.
  Graph induced(std::span<const Vertex> vertices) const;

  // Text identifier of the structure (vertex count plus sorted adjacency).
  // Equal for equal graphs; no isomorphism reduction.
  std::string structure_id() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }

 private:
  void finalize();

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::vector<PackedBits> closed_;
  std::size_t edge_count_ = 0;
};

class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::size_t vertex_count) : labels_(vertex_count) {}

  Vertex add_vertex(std::string label = {});
  std::size_t vertex_count() const { return labels_.size(); }
  // Throws InputError on self-loop, out-of-range index or duplicate.
  void add_edge(Vertex u, Vertex v);
  // Returns false (and adds nothing) if the edge is already present.
  bool add_edge_if_absent(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  void set_label(Vertex v, std::string label);

  Graph build() const;

 private:
  void check(Vertex u, Vertex v) const;

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// A graph together with a 0/1 weight per vertex. No move history is kept.
class GamePosition {
 public:
  GamePosition(std::shared_ptr<const Graph> graph, WeightAssignment weights);
  GamePosition(Graph graph, WeightAssignment weights)
      : GamePosition(std::make_shared<const Graph>(std::move(graph)), std::move(weights)) {}

  static GamePosition all_ones(std::shared_ptr<const Graph> graph);
  static GamePosition all_ones(Graph graph) {
    return all_ones(std::make_shared<const Graph>(std::move(graph)));
  }

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const WeightAssignment& weights() const { return weights_; }
  bool weight(Vertex v) const { return weights_.test(v); }
  // Same graph, different weights; length must match.
  GamePosition with_weights(WeightAssignment weights) const {
    return GamePosition(graph_, std::move(weights));
  }

  friend bool operator==(const GamePosition& a, const GamePosition& b) {
    return (a.graph_ == b.graph_ || *a.graph_ == *b.graph_) && a.weights_ == b.weights_;
  }

 private:
  std::shared_ptr<const Graph> graph_;
  WeightAssignment weights_;
};

// ---- family generators -----------------------------------------------------

enum class BasicKind { Path, Cycle, Lattice2 };

// path(n): v_k at index k-1. cycle(n): same plus the edge (n-1, 0).
// lattice2(m): 2 x m ladder, see LatticeIndex.
Graph build_basic(BasicKind kind, std::size_t n);
Graph build_path(std::size_t n);
Graph build_cycle(std::size_t n);
Graph build_lattice2(std::size_t m);

// Generalised Petersen graph P(m,k), see PetersenIndex. Doubled chords of the
// inner star polygon collapse into a single edge.
Graph build_petersen(std::size_t m, std::size_t k);

Graph disjoint_union(const Graph& a, const Graph& b);
WeightAssignment concat_weights(const WeightAssignment& a, const WeightAssignment& b);

// Vertex v_{i,j} of the 2 x m lattice, row i in {0,1}, column j in 1..m, lives
// at index i*m + (j-1).
struct LatticeIndex {
  std::size_t m;
  Vertex operator()(int row, std::size_t column) const {
    return static_cast<Vertex>(static_cast<std::size_t>(row) * m + (column - 1));
  }
};

// P(m,k): outer cycle vertex v_{1,j} at index j-1, inner vertex v_{0,j} at
// index m + j - 1.
struct PetersenIndex {
  std::size_t m;
  Vertex outer(std::size_t j) const { return static_cast<Vertex>(j - 1); }
  Vertex inner(std::size_t j) const { return static_cast<Vertex>(m + j - 1); }
  // Row-major addressing matching LatticeIndex: row 0 inner, row 1 outer.
  Vertex operator()(int row, std::size_t column) const {
    return row == 0 ? inner(column) : outer(column);
  }
};

// ---- toggle-graph text format ---------------------------------------------

std::string serialize_graph(const Graph& g, const std::optional<WeightAssignment>& w = std::nullopt);

struct ParsedGraph {
  Graph graph;
  std::optional<WeightAssignment> weights;
};

// Throws InputError("line N: ...") on malformed input.
ParsedGraph parse_graph(std::string_view text);

}  // namespace toggle
