#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toggle {

enum class ClaimStatus { Holds, Violated, Incomplete };
const char* to_string(ClaimStatus s);

// One checked parameter point: named integer values (Nimbers, truth values,
// counts) and whether the claim held there.
struct ClaimCase {
  std::string params;
  std::vector<std::pair<std::string, std::int64_t>> values;
  bool ok = true;
  bool solved = true;
  std::string note;
};

struct ClaimReport {
  std::string claim;
  std::string range;
  ClaimStatus status = ClaimStatus::Holds;
  std::optional<std::string> counterexample;
  std::vector<ClaimCase> cases;

  // Status from the cases: any failure is a violation, else any unsolved
  // case makes the report incomplete.
  void settle();
};

}  // namespace toggle
