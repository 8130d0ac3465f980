#include <gtest/gtest.h>

#include <random>

#include "toggle/errors.hpp"
#include "toggle/graph.hpp"

using namespace toggle;

namespace {

void expect_simple_symmetric(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      EXPECT_NE(nb[i], v);
      EXPECT_LT(nb[i], g.vertex_count());
      if (i > 0) EXPECT_LT(nb[i - 1], nb[i]);
      EXPECT_TRUE(g.has_edge(nb[i], v));
    }
  }
}

}  // namespace

TEST(Generators, BasicSizes) {
  auto p = build_path(3);
  EXPECT_EQ(p.vertex_count(), 3u);
  EXPECT_EQ(p.edge_count(), 2u);
  auto c = build_cycle(9);
  EXPECT_EQ(c.vertex_count(), 9u);
  EXPECT_EQ(c.edge_count(), 9u);
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(c.degree(v), 2u);
  auto l = build_lattice2(9);
  EXPECT_EQ(l.vertex_count(), 18u);
  EXPECT_EQ(l.edge_count(), 25u);
  EXPECT_EQ(build_basic(BasicKind::Path, 1).vertex_count(), 1u);
  for (const auto& g : {p, c, l}) expect_simple_symmetric(g);
}

TEST(Generators, RejectSmallSizes) {
  EXPECT_THROW(build_path(0), InputError);
  EXPECT_THROW(build_cycle(2), InputError);
  EXPECT_THROW(build_lattice2(0), InputError);
  EXPECT_THROW(build_petersen(2, 1), InputError);
  EXPECT_THROW(build_petersen(5, 0), InputError);
  EXPECT_THROW(build_petersen(5, 5), InputError);
}

TEST(Generators, LatticeIndexing) {
  auto l = build_lattice2(4);
  LatticeIndex at{4};
  EXPECT_EQ(at(0, 1), 0u);
  EXPECT_EQ(at(1, 4), 7u);
  EXPECT_TRUE(l.has_edge(at(0, 2), at(1, 2)));
  EXPECT_TRUE(l.has_edge(at(1, 2), at(1, 3)));
  EXPECT_FALSE(l.has_edge(at(0, 4), at(1, 1)));
}

TEST(Generators, PetersenSmall) {
  auto g = build_petersen(5, 2);
  EXPECT_EQ(g.vertex_count(), 10u);
  EXPECT_EQ(g.edge_count(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3u);
  // inner {4,2} is two disjoint edges: 4 outer + 4 spokes + 2 chords
  auto h = build_petersen(4, 2);
  EXPECT_EQ(h.edge_count(), 10u);
  PetersenIndex at{4};
  EXPECT_TRUE(h.has_edge(at.inner(1), at.inner(3)));
  EXPECT_TRUE(h.has_edge(at.inner(2), at.inner(4)));
  expect_simple_symmetric(h);
}

TEST(Generators, PetersenOneIsWrappedLattice) {
  for (std::size_t m = 3; m <= 50; ++m) {
    auto p = build_petersen(m, 1);
    auto l = build_lattice2(m);
    LatticeIndex lat{m};
    PetersenIndex pet{m};
    ASSERT_EQ(p.edge_count(), l.edge_count() + 2) << m;
    for (auto [u, v] : l.edges()) {
      // translate lattice coordinates into Petersen indices
      auto conv = [&](Vertex x) { return pet(static_cast<int>(x / m), x % m + 1); };
      EXPECT_TRUE(p.has_edge(conv(u), conv(v))) << m;
    }
    EXPECT_TRUE(p.has_edge(pet(0, 1), pet(0, m)));
    EXPECT_TRUE(p.has_edge(pet(1, 1), pet(1, m)));
    (void)lat;
    if (m == 9) EXPECT_EQ(p.edge_count(), 27u);
  }
}

TEST(Union, Sizes) {
  auto a = disjoint_union(Graph(1), Graph(1));
  EXPECT_EQ(a.vertex_count(), 2u);
  EXPECT_EQ(a.edge_count(), 0u);
  auto b = disjoint_union(build_path(2), build_cycle(3));
  EXPECT_EQ(b.vertex_count(), 5u);
  EXPECT_EQ(b.edge_count(), 4u);
  EXPECT_TRUE(b.has_edge(2, 4));
  auto c = build_cycle(5);
  EXPECT_EQ(disjoint_union(c, Graph(0)), c);
}

TEST(Components, InducedAndIds) {
  auto g = disjoint_union(build_path(3), build_cycle(4));
  auto comps = g.components();
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[1], (std::vector<Vertex>{3, 4, 5, 6}));
  EXPECT_EQ(g.induced(comps[1]).structure_id(), build_cycle(4).structure_id());
  EXPECT_NE(build_path(4).structure_id(), build_cycle(4).structure_id());
}

TEST(Format, SerializeExample) {
  auto text = serialize_graph(build_path(2), PackedBits::from_string("11"));
  EXPECT_EQ(text, "toggle-graph 1\nn 2\ne 0 1\nw 11\n");
  auto parsed = parse_graph(text);
  EXPECT_EQ(parsed.graph, build_path(2));
  ASSERT_TRUE(parsed.weights);
  EXPECT_EQ(parsed.weights->to_string(), "11");
}

TEST(Format, Errors) {
  EXPECT_THROW(parse_graph("toggle-graph 1\nn 2\ne 0 1\nw 1\n"), InputError);
  try {
    parse_graph("toggle-graph 1\nn 2\n# comment\ne 0 2\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
  EXPECT_THROW(parse_graph("toggle-graph 1\nn 2\ne 0 1\ne 1 0\n"), InputError);
  EXPECT_THROW(parse_graph("toggle-graph 1\nn 2\ne 1 1\n"), InputError);
  EXPECT_THROW(parse_graph("n 2\n"), InputError);
  EXPECT_THROW(parse_graph("toggle-graph 1\nn 2\nq\n"), InputError);
  EXPECT_THROW(parse_graph("toggle-graph 1\nn 2\nw 1x\n"), InputError);
}

TEST(Format, LabelsRoundTrip) {
  GraphBuilder b;
  auto x = b.add_vertex("chi_1");
  auto y = b.add_vertex("lambda_2");
  b.add_edge(x, y);
  auto g = b.build();
  auto parsed = parse_graph(serialize_graph(g));
  EXPECT_EQ(parsed.graph, g);
  EXPECT_EQ(parsed.graph.label(1), "lambda_2");
  EXPECT_FALSE(parsed.weights);
}

TEST(Format, RandomRoundTrip) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = rng() % 31;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 5 == 0) edges.emplace_back(u, v);
    Graph g(n, edges);
    PackedBits w(n);
    for (std::size_t i = 0; i < n; ++i) w.set(i, rng() & 1);
    auto parsed = parse_graph(serialize_graph(g, w));
    ASSERT_EQ(parsed.graph, g);
    ASSERT_TRUE(parsed.weights);
    ASSERT_EQ(*parsed.weights, w);
  }
}

TEST(Position, LengthMismatch) {
  EXPECT_THROW(GamePosition(build_path(3), PackedBits(2)), InputError);
  EXPECT_THROW(Graph(2, std::vector<Edge>{{0, 1}, {1, 0}}), InputError);
}
