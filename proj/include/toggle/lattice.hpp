#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toggle/graph.hpp"
#include "toggle/solver.hpp"

namespace toggle {

// Positions on the 2 x m ladder (see LatticeIndex).
//   H: zeros v01 v0m v11 v12 v1,m-1 v1m   (m = 3: v01 v03 v11 v13)
//   D: zeros v01 v0,m-1 v0m v11 v12 v1m
//   T: zeros v0,m-1 v0m v1m
//   GridAllOnes: no zeros
enum class LatticeKind { H, D, T, GridAllOnes };

struct LatticeFamilyId {
  LatticeKind kind;
  std::size_t m;
};

const char* to_string(LatticeKind kind);

GamePosition make_family(LatticeFamilyId id);

// Mutual recurrences for H and D; linear memo, any m >= 3.
Nimber grundy_H(std::size_t m);
Nimber grundy_D(std::size_t m);
// 1 if grundy_H(m + 1) == 0, else 0.
Nimber grundy_Pm1_empty(std::size_t m);

// Capped segments. A 2 x l segment has a cap at each end: F (the end column
// is all ones) or C_r (the end column is all zero and the next column has a
// zero in row r). By left/right and top/bottom symmetry four tables cover all
// cases: FF (full grid), FC (T), CC with equal rows (H) and CC with different
// rows (D). Entry l holds the Nimber of the segment of length l; entries below
// the smallest meaningful length are zero.
struct SegmentTables {
  std::vector<Nimber> ff;
  std::vector<Nimber> fc;
  std::vector<Nimber> cc_same;
  std::vector<Nimber> cc_diff;
};
SegmentTables compute_segment_tables(std::size_t max_length);

struct SegmentValidation {
  bool passed = false;
  std::size_t max_m = 0;
  std::string detail;
};
// Compares the segment tables with the generic solver for every family and
// every m <= max_m.
SegmentValidation validate_segment_tables(std::size_t max_m, int jobs = 1);

struct LatticeOptions {
  // Use the generic solver when the segment tables failed validation.
  bool allow_fallback = true;
  std::size_t validation_max_m = 12;
};

// Both validate the segment tables once per process before trusting them.
Nimber grundy_T(std::size_t m, const LatticeOptions& options = {});
Nimber grundy_grid_allones(std::size_t m, const LatticeOptions& options = {});

}  // namespace toggle
