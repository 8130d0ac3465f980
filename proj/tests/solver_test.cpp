#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "toggle/engine.hpp"
#include "toggle/solver.hpp"

using namespace toggle;

namespace {

oracle::Game to_oracle(const Graph& g) {
  oracle::Game o(static_cast<int>(g.vertex_count()));
  for (auto [u, v] : g.edges()) o.edge(static_cast<int>(u), static_cast<int>(v));
  return o;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, int pct) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (static_cast<int>(rng() % 100) < pct) edges.emplace_back(a, b);
  return Graph(n, edges);
}

PackedBits random_weights(std::mt19937_64& rng, std::size_t n) {
  PackedBits w(n);
  for (std::size_t i = 0; i < n; ++i) w.set(i, rng() % 4 != 0);
  return w;
}

}  // namespace

TEST(Mex, Examples) {
  EXPECT_EQ(mex({}), 0u);
  EXPECT_EQ(mex({0, 1, 3}), 2u);
  EXPECT_EQ(mex({1, 2}), 0u);
  EXPECT_EQ(mex({2, 0, 0, 1}), 3u);
}

TEST(Grundy, SmallExamples) {
  EXPECT_EQ(grundy(GamePosition(build_petersen(5, 2), PackedBits(10))), 0u);
  EXPECT_EQ(grundy(GamePosition::all_ones(Graph(1))), 1u);
  EXPECT_EQ(grundy(GamePosition::all_ones(disjoint_union(Graph(1), Graph(1)))), 0u);
  EXPECT_EQ(winner(GamePosition(build_path(4), PackedBits(4))), Winner::PreviousPlayer);
  EXPECT_EQ(winner(GamePosition::all_ones(Graph(1))), Winner::NextPlayer);
}

TEST(BestMove, Examples) {
  EXPECT_EQ(best_move(GamePosition::all_ones(Graph(1))), std::optional<Vertex>(0));
  EXPECT_EQ(best_move(GamePosition(build_path(3), PackedBits(3))), std::nullopt);
  EXPECT_EQ(best_move(GamePosition::all_ones(build_path(2))), std::optional<Vertex>(0));
}

TEST(Grundy, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    auto g = random_graph(rng, n, 30);
    auto w = random_weights(rng, n);
    auto o = to_oracle(g);
    GrundySolver solver;
    GamePosition pos(g, w);
    const Nimber got = solver.grundy(pos);
    ASSERT_EQ(static_cast<int>(got), o.grundy(w.to_string())) << serialize_graph(g, w);
    // zero iff every successor is non-zero
    bool all_positive = true;
    for (Vertex v : playable_set(pos)) all_positive &= solver.grundy(apply_move(pos, v)) > 0;
    EXPECT_EQ(got == 0, all_positive);
    // best move soundness
    auto bm = solver.best_move(pos);
    if (bm) {
      EXPECT_EQ(solver.grundy(apply_move(pos, *bm)), 0u);
    } else {
      EXPECT_TRUE(all_positive);
    }
  }
}

TEST(Grundy, UnionLaw) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_graph(rng, 1 + rng() % 8, 40);
    auto b = random_graph(rng, 1 + rng() % 8, 40);
    auto wa = random_weights(rng, a.vertex_count());
    auto wb = random_weights(rng, b.vertex_count());
    GamePosition joined(disjoint_union(a, b), concat_weights(wa, wb));
    SolverOptions whole;
    whole.decompose = false;
    const Nimber expect = grundy(GamePosition(a, wa)) ^ grundy(GamePosition(b, wb));
    EXPECT_EQ(GrundySolver(whole).grundy(joined), expect);
    EXPECT_EQ(grundy(joined), expect);
  }
}

TEST(Grundy, ParallelRootMatchesSerial) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(rng, 8 + rng() % 10, 20);
    auto w = random_weights(rng, g.vertex_count());
    GamePosition pos(g, w);
    SolverOptions par;
    par.jobs = 8;
    GrundySolver serial, parallel(par);
    EXPECT_EQ(serial.grundy(pos), parallel.grundy(pos));
    EXPECT_EQ(serial.best_move(pos), parallel.best_move(pos));
  }
}

TEST(Grundy, MemoLimit) {
  SolverOptions tiny;
  tiny.memo_limit = 3;
  GrundySolver solver(tiny);
  try {
    solver.grundy(GamePosition::all_ones(build_lattice2(5)));
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_GT(e.stats().entries, 3u);
    EXPECT_NE(std::string(e.what()).find("entries="), std::string::npos);
  }
}

TEST(Grundy, WideGraphs) {
  // more than 64 and 128 vertices exercise the wider key widths
  for (std::size_t n : {70u, 140u, 300u}) {
    auto pos = GamePosition::all_ones(build_path(n));
    SolverOptions opts;
    opts.decompose = false;
    PackedBits w(n);
    for (std::size_t i = 0; i < 9; ++i) w.set(n - 1 - i);
    auto tail = pos.with_weights(w);
    auto o = to_oracle(build_path(9));
    EXPECT_EQ(static_cast<int>(GrundySolver(opts).grundy(tail)), o.grundy("111111111"));
  }
}
