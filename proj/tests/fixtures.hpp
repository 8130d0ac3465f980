#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "toggle/graph.hpp"

namespace fixtures {

using toggle::Edge;
using toggle::GamePosition;
using toggle::Graph;
using toggle::PackedBits;
using toggle::Vertex;

inline GamePosition with_zeros(Graph g, std::initializer_list<Vertex> zeros) {
  PackedBits w(g.vertex_count(), true);
  for (Vertex v : zeros) w.set(v, false);
  return GamePosition(std::move(g), w);
}

// Path v1..v8 at indices 0..7 with v6 switched off.
inline GamePosition blocked_path() { return with_zeros(toggle::build_path(8), {5}); }

// Degree-3 tree: v; u1..u3; w1..w6; d1, d2 below w1 and d7, d8 below w4.
struct CubicTree {
  enum : Vertex { v, u1, u2, u3, w1, w2, w3, w4, w5, w6, d1, d2, d7, d8, count };
  static GamePosition position() {
    std::vector<Edge> e = {{v, u1},  {v, u2},  {v, u3},  {u1, w1}, {u1, w2}, {u2, w3}, {u2, w4},
                           {u3, w5}, {u3, w6}, {w1, d1}, {w1, d2}, {w4, d7}, {w4, d8}};
    return with_zeros(Graph(count, e), {u3});
  }
};

}  // namespace fixtures
