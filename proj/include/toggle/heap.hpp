#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toggle/solver.hpp"

namespace toggle {

// Octal code .d1d2d3...; digit k governs removing k tokens. Bit 1: remove a
// whole heap of exactly k. Bit 2: remove k from a larger heap. Bit 4: remove k
// and split the rest into two non-empty heaps.
struct OctalCode {
  std::vector<int> digits;

  // Accepts "11337", ".11337", "0.11337" and the middle-dot form.
  static OctalCode parse(std::string_view text);
  std::string to_string() const;
};

// Values for heaps 0..max_heap.
std::vector<Nimber> octal_sequence(const OctalCode& code, std::size_t max_heap);
Nimber octal_grundy(const OctalCode& code, std::size_t heap);

// A move outcome: tokens removed and the sorted sizes of what is left.
struct HeapOutcome {
  std::size_t removed;
  std::vector<std::size_t> heaps;
  auto operator<=>(const HeapOutcome&) const = default;
};
std::set<HeapOutcome> octal_moves(const OctalCode& code, std::size_t heap);
// Jacob's Ladder moves on a path of n vertices: remove N2[v] measured in the
// graph of remaining vertices, report the sizes of the remaining pieces.
std::set<HeapOutcome> jl_path_moves(std::size_t n);

const OctalCode& jl_octal_code();  // .11337

// Jacob's Ladder on C_m by play on vertex subsets (m <= 20).
Nimber jl_grundy_direct(std::size_t m);
// Via the octal game: every first move leaves a path of max(m - 5, 0).
Nimber jl_grundy(std::size_t m);
Nimber jl_sum_grundy(std::span<const std::size_t> parts);

// Drop the first three entries; positive -> 0, zero -> 1.
std::vector<Nimber> transform_octal_to_p01(std::span<const Nimber> seq);

struct BFile {
  std::int64_t first_index = 0;
  std::vector<std::int64_t> values;
};
// "index value" lines with consecutive indices; '#' comments and blank lines
// skipped. Throws InputError("line N: ...").
BFile parse_bfile(std::string_view text);

struct SequenceCheckReport {
  std::string sequence;
  std::size_t compared = 0;
  std::optional<std::size_t> first_mismatch;  // index into `computed`
  std::int64_t computed_value = 0;
  std::int64_t reference_value = 0;
};
// Compares computed[i] with reference[i + offset] wherever both exist.
SequenceCheckReport crosscheck(std::span<const std::int64_t> computed,
                               std::span<const std::int64_t> reference, std::ptrdiff_t offset,
                               std::string sequence = {});

// Offsets o in [lo, hi] for which seq[t] == target[t + o - target_first] for
// every t in the overlap, with at least min_overlap compared terms.
std::vector<std::ptrdiff_t> matching_offsets(std::span<const Nimber> seq,
                                             std::span<const Nimber> target,
                                             std::ptrdiff_t target_first, std::ptrdiff_t lo,
                                             std::ptrdiff_t hi, std::size_t min_overlap);

// TOGGLE_DATA_DIR, else the data directory of the source tree.
std::filesystem::path data_dir();
// Reads b<digits>.txt for an id such as "A071426" from dir.
BFile load_snapshot(std::string_view id, const std::filesystem::path& dir = data_dir());
// Plain HTTP GET of <base>/<id>/b<digits>.txt. Throws ResourceError when the
// request fails.
std::string fetch_bfile(std::string_view id, const std::string& base_url);

}  // namespace toggle
