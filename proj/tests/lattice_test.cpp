#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "oracle.hpp"
#include "toggle/errors.hpp"
#include "toggle/lattice.hpp"
#include "toggle/solver.hpp"

using namespace toggle;

namespace {

std::set<std::pair<int, std::size_t>> zeros(const GamePosition& p, std::size_t m) {
  LatticeIndex at{m};
  std::set<std::pair<int, std::size_t>> z;
  for (int row = 0; row < 2; ++row)
    for (std::size_t c = 1; c <= m; ++c)
      if (!p.weight(at(row, c))) z.emplace(row, c);
  return z;
}

int oracle_grundy(const GamePosition& p) {
  oracle::Game o(static_cast<int>(p.graph().vertex_count()));
  for (auto [u, v] : p.graph().edges()) o.edge(static_cast<int>(u), static_cast<int>(v));
  return o.grundy(p.weights().to_string());
}

}  // namespace

TEST(Family, ZeroSets) {
  using Z = std::set<std::pair<int, std::size_t>>;
  EXPECT_EQ(zeros(make_family({LatticeKind::H, 9}), 9), (Z{{0, 1}, {0, 9}, {1, 1}, {1, 2}, {1, 8}, {1, 9}}));
  EXPECT_EQ(zeros(make_family({LatticeKind::T, 9}), 9), (Z{{0, 8}, {0, 9}, {1, 9}}));
  EXPECT_EQ(zeros(make_family({LatticeKind::H, 3}), 3), (Z{{0, 1}, {0, 3}, {1, 1}, {1, 3}}));
  EXPECT_EQ(zeros(make_family({LatticeKind::D, 7}), 7), (Z{{0, 1}, {0, 6}, {0, 7}, {1, 1}, {1, 2}, {1, 7}}));
  EXPECT_TRUE(zeros(make_family({LatticeKind::GridAllOnes, 5}), 5).empty());
}

TEST(Family, MinimumSizes) {
  EXPECT_THROW(make_family({LatticeKind::H, 2}), InputError);
  EXPECT_THROW(make_family({LatticeKind::D, 2}), InputError);
  EXPECT_THROW(make_family({LatticeKind::T, 1}), InputError);
  EXPECT_NO_THROW(make_family({LatticeKind::T, 2}));
}

TEST(Recurrence, HandValues) {
  EXPECT_EQ(grundy_H(3), 0u);
  EXPECT_EQ(grundy_H(4), 0u);
  EXPECT_EQ(grundy_D(4), 0u);
  EXPECT_EQ(grundy_H(5), 1u);
  EXPECT_EQ(grundy_Pm1_empty(3), 1u);
  EXPECT_EQ(grundy_Pm1_empty(4), 0u);
  EXPECT_EQ(grundy_grid_allones(1), 1u);
}

TEST(Recurrence, MatchesNaiveOracleSmall) {
  for (std::size_t m = 3; m <= 7; ++m) {
    EXPECT_EQ(static_cast<int>(grundy_H(m)), oracle_grundy(make_family({LatticeKind::H, m}))) << m;
    EXPECT_EQ(static_cast<int>(grundy_D(m)), oracle_grundy(make_family({LatticeKind::D, m}))) << m;
  }
}

TEST(Recurrence, MatchesSolver) {
  GrundySolver s;
  for (std::size_t m = 3; m <= 12; ++m) {
    EXPECT_EQ(grundy_H(m), s.grundy(make_family({LatticeKind::H, m}))) << m;
    EXPECT_EQ(grundy_D(m), s.grundy(make_family({LatticeKind::D, m}))) << m;
  }
  for (std::size_t m = 2; m <= 12; ++m)
    EXPECT_EQ(grundy_T(m), s.grundy(make_family({LatticeKind::T, m}))) << m;
  for (std::size_t m = 1; m <= 12; ++m)
    EXPECT_EQ(grundy_grid_allones(m), s.grundy(GamePosition::all_ones(build_lattice2(m)))) << m;
  for (std::size_t m = 3; m <= 8; ++m)
    EXPECT_EQ(grundy_Pm1_empty(m), s.grundy(GamePosition::all_ones(build_petersen(m, 1)))) << m;
}

TEST(Recurrence, HalfRangeMexEqualsFullRange) {
  for (std::size_t m = 5; m <= 60; ++m) {
    std::set<Nimber> half, full;
    const std::size_t s = (m + 1) / 2;
    for (std::size_t i = 3; i <= m - 2; ++i) {
      Nimber x = grundy_H(i) ^ grundy_H(m + 1 - i);
      Nimber y = grundy_D(i) ^ grundy_D(m + 1 - i);
      full.insert({x, y});
      if (i <= s) half.insert({x, y});
    }
    EXPECT_EQ(half, full) << m;
  }
}

TEST(Recurrence, DIsRotationInvariant) {
  for (std::size_t m = 3; m <= 12; ++m) {
    auto p = make_family({LatticeKind::D, m});
    LatticeIndex at{m};
    for (int row = 0; row < 2; ++row)
      for (std::size_t c = 1; c <= m; ++c)
        EXPECT_EQ(p.weight(at(row, c)), p.weight(at(1 - row, m + 1 - c))) << m;
  }
}

TEST(Segments, ValidatedAgainstSolver) {
  auto v = validate_segment_tables(12);
  EXPECT_TRUE(v.passed) << v.detail;
  auto t = compute_segment_tables(14);
  std::vector<Nimber> ff(t.ff.begin() + 1, t.ff.begin() + 15);
  EXPECT_EQ(ff, (std::vector<Nimber>{1, 1, 2, 0, 3, 1, 1, 0, 3, 3, 2, 2, 4, 0}));
}

TEST(Recurrence, LargeM) {
  auto start = std::chrono::steady_clock::now();
  Nimber a = grundy_H(5000), b = grundy_D(5000), c = grundy_T(5000), d = grundy_grid_allones(5000);
  (void)a, (void)b, (void)c, (void)d;
  EXPECT_EQ(grundy_Pm1_empty(4999), grundy_H(5000) == 0 ? 1u : 0u);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(Recurrence, NoFallbackBeyondRange) {
  LatticeOptions strict;
  strict.allow_fallback = false;
  EXPECT_NO_THROW(grundy_T(300, strict));
}
