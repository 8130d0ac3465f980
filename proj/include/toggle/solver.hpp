#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>

#include "toggle/errors.hpp"
#include "toggle/graph.hpp"

namespace toggle {

using Nimber = std::uint32_t;

Nimber mex(std::span<const Nimber> values);
inline Nimber mex(std::initializer_list<Nimber> values) {
  return mex(std::span<const Nimber>(values.begin(), values.size()));
}

enum class Winner { NextPlayer, PreviousPlayer };
const char* to_string(Winner w);

struct SolverOptions {
  std::size_t memo_limit = std::size_t{1} << 24;
  // Zero means no limit.
  std::chrono::milliseconds time_limit{0};
  bool decompose = true;
  // Root successors are evaluated on this many threads.
  int jobs = 1;
};

struct SolverStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t entries = 0;
  std::size_t structures = 0;
};
std::string to_string(const SolverStats& s);

class BudgetExceeded : public ResourceError {
 public:
  BudgetExceeded(const std::string& what, SolverStats stats)
      : ResourceError(what + " (" + to_string(stats) + ")"), stats_(stats) {}
  const SolverStats& stats() const { return stats_; }

 private:
  SolverStats stats_;
};

namespace detail {
class ComponentContext;
struct Budget;
}  // namespace detail

// Memoized Grundy evaluation. One solver may be reused across positions; its
// memo is keyed by component structure, so positions on the same graph share
// entries. Not safe to call from several threads at once; use `jobs` instead.
class GrundySolver {
 public:
  explicit GrundySolver(SolverOptions options = {});
  ~GrundySolver();
  GrundySolver(const GrundySolver&) = delete;
  GrundySolver& operator=(const GrundySolver&) = delete;

  Nimber grundy(const GamePosition& pos);
  Winner winner(const GamePosition& pos) {
    return grundy(pos) > 0 ? Winner::NextPlayer : Winner::PreviousPlayer;
  }
  // Lowest playable vertex leading to a zero position; empty when the
  // position itself is zero.
  std::optional<Vertex> best_move(const GamePosition& pos);

  SolverStats stats() const;
  const SolverOptions& options() const { return options_; }

 private:
  detail::ComponentContext& context_for(const Graph& component);
  Nimber solve_component(const Graph& component, const PackedBits& weights);

  SolverOptions options_;
  std::unique_ptr<detail::Budget> budget_;
  std::map<std::string, std::unique_ptr<detail::ComponentContext>> contexts_;
};

// One-shot helpers with default options.
Nimber grundy(const GamePosition& pos);
Winner winner(const GamePosition& pos);
std::optional<Vertex> best_move(const GamePosition& pos);

}  // namespace toggle
