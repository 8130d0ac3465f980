#include "toggle/report.hpp"

namespace toggle {

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Holds: return "holds";
    case ClaimStatus::Violated: return "violated";
    case ClaimStatus::Incomplete: return "incomplete";
  }
  return "?";
}

void ClaimReport::settle() {
  status = ClaimStatus::Holds;
  counterexample.reset();
  for (const auto& c : cases) {
    if (c.solved && !c.ok) {
      status = ClaimStatus::Violated;
      counterexample = c.params;
      return;
    }
  }
  for (const auto& c : cases)
    if (!c.solved) status = ClaimStatus::Incomplete;
}

}  // namespace toggle
