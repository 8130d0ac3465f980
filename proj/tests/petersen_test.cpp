#include <gtest/gtest.h>

#include "oracle.hpp"
#include "toggle/errors.hpp"
#include "toggle/engine.hpp"
#include "toggle/heap.hpp"
#include "toggle/petersen.hpp"
#include "toggle/solver.hpp"

using namespace toggle;

namespace {

Nimber solve(PetersenTag t, std::size_t m, std::size_t k) {
  return grundy(make_petersen_position({t, m, k}));
}

}  // namespace

TEST(Positions, CanonicalWeights) {
  auto p = make_petersen_position({PetersenTag::P01, 9, 2});
  PetersenIndex at{9};
  for (std::size_t j = 1; j <= 9; ++j) {
    EXPECT_TRUE(p.weight(at.outer(j)));
    EXPECT_FALSE(p.weight(at.inner(j)));
  }
  EXPECT_EQ(make_petersen_position({PetersenTag::P11, 9, 2}).weights().count(), 18u);
  auto q = make_petersen_position({PetersenTag::P10, 6, 2});
  PetersenIndex at6{6};
  for (std::size_t j = 1; j <= 6; ++j) {
    EXPECT_TRUE(q.weight(at6.inner(j)));
    EXPECT_FALSE(q.weight(at6.outer(j)));
  }
  EXPECT_THROW(make_petersen_position({PetersenTag::P01, 5, 5}), InputError);
  EXPECT_THROW(make_petersen_position({PetersenTag::P01, 2, 1}), InputError);
}

TEST(Positions, TagParsing) {
  EXPECT_EQ(parse_petersen_tag("01"), PetersenTag::P01);
  EXPECT_EQ(parse_petersen_tag("P10"), PetersenTag::P10);
  EXPECT_THROW(parse_petersen_tag("00"), InputError);
}

TEST(Table, Examples) {
  EXPECT_EQ(solve(PetersenTag::P01, 6, 1), 0u);
  EXPECT_EQ(solve(PetersenTag::P10, 6, 2), 0u);
  auto rows = nimber_table({PetersenTag::P01, PetersenTag::P10}, 5, 6, 1, 2);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].m, 5u);
  EXPECT_EQ(rows[0].k, 1u);
  EXPECT_EQ(rows[0].tag, PetersenTag::P01);
  EXPECT_EQ(rows[1].tag, PetersenTag::P10);
  std::string csv = table_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n') + 1), "variant,m,k,nimber\n");
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Table, MatchesNaiveOracle) {
  for (std::size_t m = 3; m <= 6; ++m)
    for (std::size_t k = 1; k < m; ++k)
      for (auto t : {PetersenTag::P01, PetersenTag::P10, PetersenTag::P11}) {
        auto p = make_petersen_position({t, m, k});
        oracle::Game o(static_cast<int>(p.graph().vertex_count()));
        for (auto [u, v] : p.graph().edges()) o.edge(static_cast<int>(u), static_cast<int>(v));
        EXPECT_EQ(static_cast<int>(grundy(p)), o.grundy(p.weights().to_string()))
            << to_string(t) << ' ' << m << ' ' << k;
      }
}

TEST(Table, MatchesA361517Snapshot) {
  auto ref = load_snapshot("A361517");
  auto rows = nimber_table({PetersenTag::P01}, 3, 20, 1, 1);
  std::vector<std::int64_t> computed;
  for (const auto& r : rows) computed.push_back(*r.nimber);
  auto rep = crosscheck(computed, ref.values, 3 - ref.first_index, "A361517");
  EXPECT_EQ(rep.compared, 18u);
  EXPECT_FALSE(rep.first_mismatch) << "m = " << 3 + *rep.first_mismatch;
}

TEST(Table, BudgetMarksCellUnsolved) {
  LabOptions o;
  o.memo_limit = 4;
  auto rows = nimber_table({PetersenTag::P11}, 9, 9, 2, 2, o);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].nimber);
  EXPECT_NE(table_csv(rows).find("unsolved"), std::string::npos);
}

TEST(Claims, AllHoldOnDefaults) {
  for (auto id : {ClaimId::ThreeKEven, ClaimId::Bounds, ClaimId::Isomorphism, ClaimId::FourEqual,
                  ClaimId::EvenCycleZero}) {
    ClaimLimits lim;
    lim.m_max = 10;
    auto r = verify_claim(id, lim);
    EXPECT_EQ(r.status, ClaimStatus::Holds) << to_string(id) << ' ' << r.counterexample.value_or("");
    EXPECT_FALSE(r.cases.empty()) << to_string(id);
  }
}

TEST(Claims, ThreeKEvenValues) {
  EXPECT_EQ(solve(PetersenTag::P10, 6, 2), 0u);
  EXPECT_EQ(solve(PetersenTag::P10, 12, 4), 0u);
}

TEST(Claims, IsomorphismExample) {
  EXPECT_EQ(solve(PetersenTag::P01, 5, 2), solve(PetersenTag::P10, 5, 3));
}

TEST(Claims, MirrorChordAgreement) {
  for (std::size_t m = 3; m <= 10; ++m)
    for (std::size_t k = 1; k < m; ++k)
      for (auto t : {PetersenTag::P01, PetersenTag::P10, PetersenTag::P11})
        EXPECT_EQ(solve(t, m, k), solve(t, m, m - k)) << to_string(t) << ' ' << m << ' ' << k;
}

TEST(Claims, ParseIds) {
  EXPECT_EQ(parse_claim_id("thm_bounds"), ClaimId::Bounds);
  EXPECT_THROW(parse_claim_id("thm_nope"), InputError);
}

TEST(Claims, BudgetGivesIncomplete) {
  ClaimLimits lim;
  lim.m_min = 9;
  lim.m_max = 10;
  LabOptions o;
  o.memo_limit = 4;
  EXPECT_EQ(verify_claim(ClaimId::Bounds, lim, o).status, ClaimStatus::Incomplete);
}

TEST(Monotone, LadderFamilies) {
  EXPECT_TRUE(check_unplayability_monotone(make_petersen_position({PetersenTag::P01, 7, 1}), 14).monotone);
  EXPECT_TRUE(check_unplayability_monotone(make_petersen_position({PetersenTag::P10, 8, 2}), 16).monotone);
  EXPECT_TRUE(check_unplayability_monotone(make_petersen_position({PetersenTag::P01, 8, 2}), 16).monotone);
}
