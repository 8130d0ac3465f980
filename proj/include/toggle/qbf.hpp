#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "toggle/graph.hpp"
#include "toggle/report.hpp"

namespace toggle {

struct Literal {
  std::uint32_t var;  // 1-based
  bool positive;
  bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

// Variables 1..n under the prefix  exists b1, forall b2, exists b3, ...
// Literals in each clause are ordered by variable (stable for repeats).
struct QbfInstance {
  std::uint32_t n = 0;
  std::vector<Clause> clauses;
};

// Sorts literals as above; throws InputError on a variable outside 1..n.
QbfInstance make_instance(std::uint32_t n, std::vector<Clause> clauses);

// DIMACS with "p cnf <n> <m>", one clause of exactly three literals per line
// ending in 0, 'c' comments, and optional e/a prefix lines that must
// quantify 1..n in order with strict alternation starting at e.
QbfInstance parse_dimacs(std::string_view text);
std::string to_dimacs(const QbfInstance& inst);

// Exhaustive quantifier expansion; n <= 24.
bool evaluate_qbf(const QbfInstance& inst);

struct ReductionArtifact {
  Graph graph;
  WeightAssignment weights;
  std::map<std::string, Vertex> index_of_role;

  Vertex at(const std::string& role) const;
  GamePosition position() const { return GamePosition(graph, weights); }
};

// Expected vertex count 4n + 28m + 9, plus 7 for odd n.
std::size_t reduction_vertex_count(std::size_t n, std::size_t m);

// Labels: v0_j v1_j c1_j d5_j chi_i c2_i d6_i d7_i d13_i d4_i d14_i d3_i
// sigma1_i sigma2_i d2_i d8_i d11_1 d12_1 d12_2 d1_1..d1_3 lambda_1..3
// d9_1 d9_2 d10_1..d10_4 EndGame. Throws ConstructionError when a wiring audit
// fails and InputError for an instance without clauses.
ReductionArtifact build_reduction(const QbfInstance& inst);

struct SizeReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t expected_vertices = 0;
  // one clause (b1 or b2 or b3, capped at n) appended
  std::ptrdiff_t clause_vertices = 0;
  std::ptrdiff_t clause_edges = 0;
  // one variable appended, clauses unchanged
  std::ptrdiff_t variable_vertices = 0;
  std::ptrdiff_t variable_edges = 0;
};
SizeReport audit_sizes(const QbfInstance& inst);

struct EquivalenceOptions {
  std::size_t max_vars = 6;
  std::size_t max_clauses = 4;
  std::size_t memo_limit = std::size_t{1} << 24;
};

// Values: qbf (0/1), toggle_first_wins (0/1), states, variable_order_ok,
// forced_ok, dummies_ok. The case holds when all agree.
ClaimCase check_equivalence_case(const QbfInstance& inst, const EquivalenceOptions& options = {});
ClaimReport verify_equivalence(const QbfInstance& inst, const EquivalenceOptions& options = {});

// Deterministic sample: n in 1..max_vars, m in 1..max_clauses, uniform
// literals, drawn from mt19937_64(seed).
std::vector<QbfInstance> sample_instances(std::size_t count, std::uint64_t seed,
                                          std::size_t max_vars, std::size_t max_clauses);
// All 8 polarity patterns of (b1, b2, b3).
std::vector<QbfInstance> polarity_instances();

ClaimReport verify_equivalence_batch(const std::vector<QbfInstance>& instances,
                                     const std::string& range, int jobs,
                                     const EquivalenceOptions& options = {});

}  // namespace toggle
