#include "toggle/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <exception>
#include <vector>

#include "toggle/engine.hpp"
#include "toggle/memo_table.hpp"

namespace toggle {

Nimber mex(std::span<const Nimber> values) {
  std::vector<bool> present(values.size() + 1, false);
  for (Nimber v : values)
    if (v < present.size()) present[v] = true;
  Nimber m = 0;
  while (present[m]) ++m;
  return m;
}

const char* to_string(Winner w) { return w == Winner::NextPlayer ? "next" : "previous"; }

std::string to_string(const SolverStats& s) {
  return "entries=" + std::to_string(s.entries) + " hits=" + std::to_string(s.hits) +
         " misses=" + std::to_string(s.misses) + " structures=" + std::to_string(s.structures);
}

namespace detail {

struct Budget {
  std::size_t limit;
  std::chrono::steady_clock::time_point deadline;
  bool timed;
  std::atomic<std::uint64_t> entries{0};
  std::atomic<std::uint64_t> hits{0};
  std::atomic<std::uint64_t> misses{0};
  std::size_t structures = 0;

  SolverStats snapshot() const {
    return {hits.load(), misses.load(), entries.load(), structures};
  }
};

class ComponentContext {
 public:
  virtual ~ComponentContext() = default;
  virtual Nimber solve(const PackedBits& weights, int jobs) = 0;
};

template <std::size_t W>
class Context final : public ComponentContext {
 public:
  using Key = typename MemoTable<W>::Key;

  Context(const Graph& g, Budget& budget) : n_(g.vertex_count()), budget_(budget) {
    closed_.resize(n_);
    half_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v] = pack(g.closed_mask(v));
      half_[v] = static_cast<std::uint16_t>((g.degree(v) + 1) / 2);
    }
  }

  Nimber solve(const PackedBits& weights, int jobs) override {
    const Key w = pack(weights);
    if (jobs <= 1) return eval(w);
    if (is_zero(w)) return 0;
    if (auto hit = table_.find(w)) return *hit;

    std::vector<Key> children;
    for_each_move(w, [&](Vertex, const Key& child) { children.push_back(child); });
    std::vector<Nimber> values(children.size());
    std::exception_ptr failure;
    table_.set_concurrent(true);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(children.size()); ++i) {
      try {
        values[static_cast<std::size_t>(i)] = eval(children[static_cast<std::size_t>(i)]);
      } catch (...) {
#pragma omp critical(toggle_solver_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    table_.set_concurrent(false);
    if (failure) std::rethrow_exception(failure);
    const Nimber g = mex(values);
    store(w, g);
    return g;
  }

 private:
  static Key pack(const PackedBits& bits) {
    Key k{};
    for (std::size_t i = 0; i < bits.word_count(); ++i) k[i] = bits.word(i);
    return k;
  }
  static bool is_zero(const Key& k) {
    for (auto x : k)
      if (x != 0) return false;
    return true;
  }

  // Calls f(v, successor) for every playable v in ascending order.
  template <class F>
  void for_each_move(const Key& w, F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      for (std::uint64_t rest = w[i]; rest != 0; rest &= rest - 1) {
        const auto v = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(rest)));
        const Key& mask = closed_[v];
        unsigned ones = 0;
        for (std::size_t j = 0; j < W; ++j) ones += static_cast<unsigned>(std::popcount(w[j] & mask[j]));
        if (ones <= half_[v]) continue;
        Key child;
        for (std::size_t j = 0; j < W; ++j) child[j] = w[j] ^ mask[j];
        f(v, child);
      }
    }
  }

  Nimber eval(const Key& w) {
    if (is_zero(w)) return 0;
    if (auto hit = table_.find(w)) {
      budget_.hits.fetch_add(1, std::memory_order_relaxed);
      return *hit;
    }
    const auto missed = budget_.misses.fetch_add(1, std::memory_order_relaxed);
    if (budget_.timed && (missed & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() > budget_.deadline)
      throw BudgetExceeded("solver time limit exceeded", budget_.snapshot());

    // Grundy values never exceed the number of moves, itself at most n.
    std::array<std::uint64_t, W + 1> seen{};
    for_each_move(w, [&](Vertex, const Key& child) {
      const Nimber g = eval(child);
      seen[g >> 6] |= std::uint64_t{1} << (g & 63);
    });
    Nimber g = 0;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (~seen[i] != 0) {
        g = static_cast<Nimber>(i * 64 + static_cast<std::size_t>(std::countr_one(seen[i])));
        break;
      }
    }
    store(w, g);
    return g;
  }

  void store(const Key& w, Nimber g) {
    if (table_.insert(w, g)) {
      const auto count = budget_.entries.fetch_add(1, std::memory_order_relaxed) + 1;
      if (count > budget_.limit)
        throw BudgetExceeded("memo limit of " + std::to_string(budget_.limit) + " entries exceeded",
                             budget_.snapshot());
    }
  }

  std::size_t n_;
  Budget& budget_;
  std::vector<Key> closed_;
  std::vector<std::uint16_t> half_;
  MemoTable<W> table_;
};

}  // namespace detail

GrundySolver::GrundySolver(SolverOptions options)
    : options_(options), budget_(std::make_unique<detail::Budget>()) {
  budget_->limit = options_.memo_limit;
  budget_->timed = options_.time_limit.count() > 0;
  budget_->deadline = std::chrono::steady_clock::now() + options_.time_limit;
}

GrundySolver::~GrundySolver() = default;

SolverStats GrundySolver::stats() const { return budget_->snapshot(); }

detail::ComponentContext& GrundySolver::context_for(const Graph& component) {
  const std::string id = component.structure_id();
  auto it = contexts_.find(id);
  if (it != contexts_.end()) return *it->second;
  const std::size_t n = component.vertex_count();
  std::unique_ptr<detail::ComponentContext> ctx;
  if (n <= 64) {
    ctx = std::make_unique<detail::Context<1>>(component, *budget_);
  } else if (n <= 128) {
    ctx = std::make_unique<detail::Context<2>>(component, *budget_);
  } else if (n <= 256) {
    ctx = std::make_unique<detail::Context<4>>(component, *budget_);
  } else if (n <= 512) {
    ctx = std::make_unique<detail::Context<8>>(component, *budget_);
  } else {
    throw ResourceError("generic solver handles components of at most 512 vertices, got " +
                        std::to_string(n));
  }
  ++budget_->structures;
  return *contexts_.emplace(id, std::move(ctx)).first->second;
}

Nimber GrundySolver::solve_component(const Graph& component, const PackedBits& weights) {
  if (weights.none()) return 0;
  if (options_.time_limit.count() > 0)
    budget_->deadline = std::chrono::steady_clock::now() + options_.time_limit;
  return context_for(component).solve(weights, options_.jobs);
}

Nimber GrundySolver::grundy(const GamePosition& pos) {
  const Graph& g = pos.graph();
  if (!options_.decompose) return solve_component(g, pos.weights());
  const auto comps = g.components();
  if (comps.size() == 1) return solve_component(g, pos.weights());
  Nimber total = 0;
  for (const auto& comp : comps) {
    PackedBits w(comp.size());
    bool any = false;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (pos.weight(comp[i])) {
        w.set(i);
        any = true;
      }
    }
    if (!any) continue;
    total ^= solve_component(g.induced(comp), w);
  }
  return total;
}

std::optional<Vertex> GrundySolver::best_move(const GamePosition& pos) {
  if (grundy(pos) == 0) return std::nullopt;
  for (Vertex v : playable_set(pos))
    if (grundy(apply_move(pos, v)) == 0) return v;
  throw std::logic_error("non-zero position without a move to zero");
}

Nimber grundy(const GamePosition& pos) { return GrundySolver().grundy(pos); }
Winner winner(const GamePosition& pos) { return GrundySolver().winner(pos); }
std::optional<Vertex> best_move(const GamePosition& pos) { return GrundySolver().best_move(pos); }

}  // namespace toggle
