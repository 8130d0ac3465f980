#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toggle/graph.hpp"
#include "toggle/report.hpp"
#include "toggle/solver.hpp"

namespace toggle {

// P01: inner off, outer on. P10: inner on, outer off. P11: all on.
enum class PetersenTag { P01, P10, P11 };

struct PetersenVariant {
  PetersenTag tag;
  std::size_t m;
  std::size_t k;
};

const char* to_string(PetersenTag tag);
// Accepts "01", "10", "11" with or without a leading "P".
PetersenTag parse_petersen_tag(std::string_view text);

GamePosition make_petersen_position(const PetersenVariant& v);

struct LabOptions {
  int jobs = 1;
  std::size_t memo_limit = std::size_t{1} << 24;
};

struct TableRow {
  PetersenTag tag;
  std::size_t m;
  std::size_t k;
  std::optional<Nimber> nimber;  // empty when the cell exceeded the budget
};

// Rows ordered by m, then k, then the order of `tags`. Pairs with k >= m are
// skipped. All variants of one (m,k) share a solver.
std::vector<TableRow> nimber_table(const std::vector<PetersenTag>& tags, std::size_t m_lo,
                                   std::size_t m_hi, std::size_t k_lo, std::size_t k_hi,
                                   const LabOptions& options = {});

// Header "variant,m,k,nimber", LF endings, "unsolved" for empty cells.
std::string table_csv(const std::vector<TableRow>& rows);

enum class ClaimId { ThreeKEven, Bounds, Isomorphism, FourEqual, EvenCycleZero };
const char* to_string(ClaimId id);
ClaimId parse_claim_id(std::string_view text);

struct ClaimLimits {
  std::size_t m_min = 3;
  std::size_t m_max = 12;
  // 3k-even claim: the values of k to check.
  std::vector<std::size_t> ks = {2, 4};
};

ClaimReport verify_claim(ClaimId claim, const ClaimLimits& limits, const LabOptions& options = {});

}  // namespace toggle
