#include "toggle/qbf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_set>

#include "toggle/engine.hpp"
#include "toggle/errors.hpp"
#include "toggle/parallel.hpp"
#include "toggle/solver.hpp"

namespace toggle {

namespace {

std::string idx(const char* stem, std::size_t i) { return std::string(stem) + "_" + std::to_string(i); }

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line_no) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw InputError("line " + std::to_string(line_no) + ": not an integer: '" + std::string(tok) + "'");
  return v;
}

}  // namespace

QbfInstance make_instance(std::uint32_t n, std::vector<Clause> clauses) {
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    for (const auto& lit : clauses[c])
      if (lit.var < 1 || lit.var > n)
        throw InputError("clause " + std::to_string(c + 1) + ": variable " + std::to_string(lit.var) +
                         " outside 1.." + std::to_string(n));
    std::stable_sort(clauses[c].begin(), clauses[c].end(),
                     [](const Literal& a, const Literal& b) { return a.var < b.var; });
  }
  return QbfInstance{n, std::move(clauses)};
}

QbfInstance parse_dimacs(std::string_view text) {
  std::optional<std::pair<long long, long long>> header;
  std::vector<Clause> clauses;
  std::uint32_t quantified = 0;
  bool saw_prefix = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c" || toks[0][0] == 'c') {
      if (end == text.size()) break;
      continue;
    }
    const std::string at = "line " + std::to_string(line_no) + ": ";
    if (toks[0] == "p") {
      if (header) throw InputError(at + "second header");
      if (toks.size() != 4 || toks[1] != "cnf") throw InputError(at + "expected 'p cnf <n> <m>'");
      long long n = to_int(toks[2], line_no), m = to_int(toks[3], line_no);
      if (n < 1 || m < 0 || n > 100000 || m > 1000000) throw InputError(at + "bad header counts");
      header = {n, m};
    } else if (toks[0] == "e" || toks[0] == "a") {
      if (!header) throw InputError(at + "prefix before header");
      if (!clauses.empty()) throw InputError(at + "prefix after clauses");
      saw_prefix = true;
      if (toks.size() < 2 || toks.back() != "0") throw InputError(at + "prefix line must end in 0");
      for (std::size_t t = 1; t + 1 < toks.size(); ++t) {
        long long v = to_int(toks[t], line_no);
        if (v != static_cast<long long>(quantified) + 1)
          throw InputError(at + "prefix must list variables 1..n in order");
        bool exists = (quantified % 2) == 0;
        if ((toks[0] == "e") != exists)
          throw InputError(at + "variable " + std::to_string(v) +
                           " breaks the alternating prefix starting with e");
        ++quantified;
      }
    } else {
      if (!header) throw InputError(at + "clause before header");
      std::vector<long long> lits;
      for (auto t : toks) lits.push_back(to_int(t, line_no));
      if (lits.back() != 0) throw InputError(at + "clause must end in 0");
      lits.pop_back();
      if (lits.size() != 3)
        throw InputError(at + "clause has " + std::to_string(lits.size()) + " literals, needs 3");
      Clause c{};
      for (std::size_t k = 0; k < 3; ++k) {
        long long v = lits[k];
        if (v == 0 || std::llabs(v) > header->first)
          throw InputError(at + "literal " + std::to_string(v) + " out of range");
        c[k] = Literal{static_cast<std::uint32_t>(std::llabs(v)), v > 0};
      }
      clauses.push_back(c);
    }
    if (end == text.size()) break;
  }
  if (!header) throw InputError("missing 'p cnf' header");
  if (static_cast<long long>(clauses.size()) != header->second)
    throw InputError("header announces " + std::to_string(header->second) + " clauses, found " +
                     std::to_string(clauses.size()));
  if (saw_prefix && quantified != header->first)
    throw InputError("prefix quantifies " + std::to_string(quantified) + " of " +
                     std::to_string(header->first) + " variables");
  return make_instance(static_cast<std::uint32_t>(header->first), std::move(clauses));
}

std::string to_dimacs(const QbfInstance& inst) {
  std::ostringstream out;
  out << "p cnf " << inst.n << ' ' << inst.clauses.size() << '\n';
  for (const auto& c : inst.clauses) {
    for (const auto& l : c) out << (l.positive ? "" : "-") << l.var << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

bool clauses_hold(const QbfInstance& inst, std::uint32_t assignment) {
  for (const auto& c : inst.clauses) {
    bool sat = false;
    for (const auto& l : c)
      if ((((assignment >> (l.var - 1)) & 1U) != 0) == l.positive) sat = true;
    if (!sat) return false;
  }
  return true;
}

bool expand(const QbfInstance& inst, std::uint32_t depth, std::uint32_t assignment) {
  if (depth == inst.n) return clauses_hold(inst, assignment);
  bool a = expand(inst, depth + 1, assignment);
  bool exists = depth % 2 == 0;
  if (exists && a) return true;
  if (!exists && !a) return false;
  return expand(inst, depth + 1, assignment | (1U << depth));
}

}  // namespace

bool evaluate_qbf(const QbfInstance& inst) {
  if (inst.n > 24) throw ResourceError("evaluate_qbf: n = " + std::to_string(inst.n) + " exceeds 24");
  return expand(inst, 0, 0);
}

Vertex ReductionArtifact::at(const std::string& role) const {
  auto it = index_of_role.find(role);
  if (it == index_of_role.end()) throw InputError("no vertex with role '" + role + "'");
  return it->second;
}

std::size_t reduction_vertex_count(std::size_t n, std::size_t m) {
  return 4 * n + 28 * m + 9 + (n % 2 == 1 ? 7 : 0);
}

ReductionArtifact build_reduction(const QbfInstance& inst) {
  const std::size_t n = inst.n, m = inst.clauses.size();
  if (n < 1) throw InputError("reduction needs at least one variable");
  if (m < 1) throw InputError("reduction needs at least one clause");

  GraphBuilder b;
  std::map<std::string, Vertex> role;
  auto add = [&](std::string name) {
    Vertex v = b.add_vertex(name);
    role.emplace(std::move(name), v);
    return v;
  };
  auto family = [&](const char* stem, std::size_t count) {
    for (std::size_t i = 1; i <= count; ++i) add(idx(stem, i));
  };
  auto V = [&](const char* stem, std::size_t i) { return role.at(idx(stem, i)); };

  for (std::size_t j = 1; j <= n; ++j)
    for (const char* s : {"v0", "v1", "c1", "d5"}) add(idx(s, j));
  for (std::size_t i = 1; i <= m; ++i)
    for (const char* s : {"chi", "c2", "d6", "d7", "d13"}) add(idx(s, i));
  family("d4", 2 * m);
  family("d14", 2 * m);
  family("d3", 3 * m);
  family("sigma1", 3 * m);
  family("sigma2", 3 * m);
  family("d2", 6 * m);
  family("d8", 4 * m);
  add("d11_1");
  add("d12_1");
  add("d12_2");
  family("d1", 3);
  add("lambda_1");
  add("lambda_2");
  const bool odd = n % 2 == 1;
  if (odd) {
    add("lambda_3");
    family("d9", 2);
    family("d10", 4);
  }
  add("EndGame");

  if (b.vertex_count() != reduction_vertex_count(n, m))
    throw ConstructionError("vertex set: built " + std::to_string(b.vertex_count()) + ", closed form " +
                            std::to_string(reduction_vertex_count(n, m)));

  auto E = [&](Vertex u, Vertex v) { b.add_edge(u, v); };

  // R(G)
  E(V("v0", n), role.at("lambda_1"));
  E(V("v1", n), role.at("lambda_1"));
  E(role.at("lambda_1"), role.at("lambda_2"));
  E(role.at("lambda_2"), role.at("d11_1"));
  E(role.at("d11_1"), role.at("d12_1"));
  E(role.at("d11_1"), role.at("d12_2"));
  if (!odd) {
    E(role.at("lambda_2"), V("c2", 1));
  } else {
    E(role.at("lambda_2"), role.at("lambda_3"));
    E(role.at("lambda_3"), V("d9", 1));
    E(role.at("lambda_3"), V("d9", 2));
    E(V("d9", 1), V("d10", 1));
    E(V("d9", 1), V("d10", 2));
    E(V("d9", 2), V("d10", 3));
    E(V("d9", 2), V("d10", 4));
    E(role.at("lambda_3"), V("c2", 1));
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t t = 4 * i - 3; t <= 4 * i; ++t) {
      E(V("c2", i), V("d8", t));
      E(V("d4", 2 * i - 1), V("d8", t));
      E(V("d4", 2 * i), V("d8", t));
    }
    for (std::size_t t = 3 * i - 2; t <= 3 * i; ++t) {
      E(V("c2", i), V("sigma2", t));
      E(V("d6", i), V("sigma2", t));
      E(V("d7", i), V("sigma1", t));
    }
    if (i < m) E(V("chi", i), V("c2", i + 1));
    for (std::size_t t = 3 * i - 2; t <= 3 * i; ++t) {
      E(V("chi", i), V("sigma1", t));
      E(V("chi", i), V("sigma2", t));
    }
    E(V("chi", i), V("d13", i));
    E(V("d13", i), V("d14", 2 * i - 1));
    E(V("d13", i), V("d14", 2 * i));
  }
  E(V("chi", m), role.at("EndGame"));

  // B(G)
  for (std::size_t t = 1; t <= 3; ++t) E(V("c1", 1), V("d1", t));
  for (std::size_t j = 1; j <= n; ++j) {
    E(V("c1", j), V("v0", j));
    E(V("c1", j), V("v1", j));
    E(V("c1", j), V("d5", j));
    E(V("v0", j), V("v1", j));
    if (j < n) {
      E(V("v0", j), V("c1", j + 1));
      E(V("v1", j), V("c1", j + 1));
    }
  }
  // Occurrence counts per variable; prefix |C*(j)| counts variables below j.
  std::vector<std::size_t> neg(n + 2, 0), pos(n + 2, 0);
  for (const auto& c : inst.clauses)
    for (const auto& l : c) (l.positive ? pos : neg)[l.var]++;
  std::vector<int> d3_hits(3 * m + 1, 0);
  std::size_t below = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= neg[j]; ++i) {
      std::size_t t = below + i;
      if (t > 3 * m) throw ConstructionError("B(G) d3 wiring: index " + std::to_string(t) + " past 3m");
      E(V("v0", j), V("d3", t));
      ++d3_hits[t];
    }
    for (std::size_t i = 1; i <= pos[j]; ++i) {
      std::size_t t = below + neg[j] + i;
      if (t > 3 * m) throw ConstructionError("B(G) d3 wiring: index " + std::to_string(t) + " past 3m");
      E(V("v1", j), V("d3", t));
      ++d3_hits[t];
    }
    below += neg[j] + pos[j];
  }
  for (std::size_t t = 1; t <= 3 * m; ++t)
    if (d3_hits[t] != 1)
      throw ConstructionError("B(G) d3 wiring: d3_" + std::to_string(t) + " hit " +
                              std::to_string(d3_hits[t]) + " times");
  for (std::size_t i = 1; i <= 3 * m; ++i) {
    E(V("d3", i), V("d2", 2 * i - 1));
    E(V("d3", i), V("d2", 2 * i));
  }

  // P(G): y1 sends the k-th sorted literal of clause j to 3j - 3 + k.
  std::vector<int> sigma_hits(3 * m + 1, 0);
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t k = 1; k <= 3; ++k) {
      const Literal& l = inst.clauses[j - 1][k - 1];
      std::size_t y = 3 * j - 3 + k;
      E(V(l.positive ? "v1" : "v0", l.var), V("sigma1", y));
      ++sigma_hits[y];
    }
  for (std::size_t t = 1; t <= 3 * m; ++t)
    if (sigma_hits[t] != 1)
      throw ConstructionError("P(G) wiring: sigma1_" + std::to_string(t) + " hit " +
                              std::to_string(sigma_hits[t]) + " times");

  std::size_t lambdas = role.count("lambda_1") + role.count("lambda_2") + role.count("lambda_3");
  if (lambdas != (odd ? 3U : 2U)) throw ConstructionError("Tree_V: wrong link vertex count");

  Graph g = b.build();
  WeightAssignment w(g.vertex_count());
  for (std::size_t j = 1; j <= n; ++j) {
    w.set(V("v0", j));
    w.set(V("v1", j));
  }
  for (std::size_t t = 1; t <= 3 * m; ++t) w.set(V("d3", t));
  for (std::size_t i = 1; i <= m; ++i) w.set(V("chi", i));
  w.set(role.at("lambda_2"));
  w.set(role.at("d11_1"));
  w.set(V("c1", 1));
  for (std::size_t t = 1; t <= 4 * m; ++t) w.set(V("d8", t));
  if (odd) {
    w.set(V("d9", 1));
    w.set(V("d9", 2));
  }
  return ReductionArtifact{std::move(g), std::move(w), std::move(role)};
}

SizeReport audit_sizes(const QbfInstance& inst) {
  SizeReport r;
  auto base = build_reduction(inst);
  r.vertices = base.graph.vertex_count();
  r.edges = base.graph.edge_count();
  r.expected_vertices = reduction_vertex_count(inst.n, inst.clauses.size());

  QbfInstance more_clauses = inst;
  auto v = [&](std::uint32_t k) { return std::min<std::uint32_t>(k, inst.n); };
  more_clauses.clauses.push_back(Clause{Literal{v(1), true}, Literal{v(2), true}, Literal{v(3), true}});
  auto c = build_reduction(more_clauses);
  r.clause_vertices = static_cast<std::ptrdiff_t>(c.graph.vertex_count()) - static_cast<std::ptrdiff_t>(r.vertices);
  r.clause_edges = static_cast<std::ptrdiff_t>(c.graph.edge_count()) - static_cast<std::ptrdiff_t>(r.edges);

  QbfInstance more_vars = inst;
  more_vars.n += 1;
  auto x = build_reduction(more_vars);
  r.variable_vertices = static_cast<std::ptrdiff_t>(x.graph.vertex_count()) - static_cast<std::ptrdiff_t>(r.vertices);
  r.variable_edges = static_cast<std::ptrdiff_t>(x.graph.edge_count()) - static_cast<std::ptrdiff_t>(r.edges);
  return r;
}

namespace {

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : k) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct WalkResult {
  std::size_t states = 0;
  bool order_ok = true;
  bool forced_ok = true;
  bool dummies_ok = true;
  std::string first_failure;
};

// Visits every reachable (weights, min(depth, n)) pair once.
WalkResult walk_reachable(const ReductionArtifact& art, std::size_t n, std::size_t limit) {
  const Graph& g = art.graph;
  std::vector<char> dummy(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) dummy[v] = g.label(v).rfind('d', 0) == 0;
  std::vector<std::pair<Vertex, Vertex>> pair_at(n);
  for (std::size_t j = 1; j <= n; ++j) pair_at[j - 1] = {art.at(idx("v0", j)), art.at(idx("v1", j))};

  WalkResult r;
  std::unordered_set<std::vector<std::uint64_t>, WordsHash> seen;
  std::vector<std::pair<PackedBits, std::size_t>> stack{{art.weights, 0}};
  auto note = [&](bool& flag, const std::string& msg) {
    if (flag && r.first_failure.empty()) r.first_failure = msg;
    flag = false;
  };
  while (!stack.empty()) {
    auto [w, depth] = std::move(stack.back());
    stack.pop_back();
    std::vector<std::uint64_t> key;
    for (std::size_t i = 0; i < w.word_count(); ++i) key.push_back(w.word(i));
    key.push_back(depth);
    if (!seen.insert(std::move(key)).second) continue;
    if (seen.size() > limit) throw ResourceError("reachable-state walk exceeded " + std::to_string(limit) + " states");

    std::vector<Vertex> play;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (playable_bits(g, w, v)) play.push_back(v);
    for (Vertex v : play)
      if (dummy[v]) note(r.dummies_ok, "dummy " + g.label(v) + " playable");
    if (depth < n) {
      auto [a, c] = pair_at[depth];
      std::vector<Vertex> want{std::min(a, c), std::max(a, c)};
      if (play != want) note(r.order_ok, "move " + std::to_string(depth + 1) + " not a choice between v0/v1_" +
                                             std::to_string(depth + 1));
    } else if (play.size() > 1) {
      note(r.forced_ok, std::to_string(play.size()) + " moves available after the variable phase");
    }
    for (Vertex v : play) {
      PackedBits next = w;
      next ^= g.closed_mask(v);
      stack.emplace_back(std::move(next), std::min(depth + 1, n));
    }
  }
  r.states = seen.size();
  return r;
}

}  // namespace

ClaimCase check_equivalence_case(const QbfInstance& inst, const EquivalenceOptions& options) {
  if (inst.n > options.max_vars || inst.clauses.size() > options.max_clauses)
    throw ResourceError("instance with n = " + std::to_string(inst.n) + ", m = " +
                        std::to_string(inst.clauses.size()) + " exceeds the search limits (n <= " +
                        std::to_string(options.max_vars) + ", m <= " + std::to_string(options.max_clauses) + ")");
  ClaimCase cc;
  std::string dimacs = to_dimacs(inst);
  std::replace(dimacs.begin(), dimacs.end(), '\n', ';');
  cc.params = dimacs;
  bool truth = evaluate_qbf(inst);
  auto art = build_reduction(inst);
  SolverOptions so;
  so.memo_limit = options.memo_limit;
  GrundySolver solver(so);
  bool first = solver.winner(art.position()) == Winner::NextPlayer;
  auto walk = walk_reachable(art, inst.n, options.memo_limit);
  cc.values = {{"qbf", truth},
               {"toggle_first_wins", first},
               {"states", static_cast<std::int64_t>(walk.states)},
               {"variable_order_ok", walk.order_ok},
               {"forced_ok", walk.forced_ok},
               {"dummies_ok", walk.dummies_ok}};
  cc.ok = truth == first && walk.order_ok && walk.forced_ok && walk.dummies_ok;
  if (truth != first) cc.note = "winner disagrees with QBF value";
  else if (!walk.first_failure.empty()) cc.note = walk.first_failure;
  return cc;
}

ClaimReport verify_equivalence(const QbfInstance& inst, const EquivalenceOptions& options) {
  return verify_equivalence_batch({inst}, "single instance", 1, options);
}

std::vector<QbfInstance> sample_instances(std::size_t count, std::uint64_t seed, std::size_t max_vars,
                                          std::size_t max_clauses) {
  if (max_vars < 1 || max_clauses < 1) throw InputError("sample limits must be positive");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t k) { return static_cast<std::uint32_t>(rng() % k); };
  std::vector<QbfInstance> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::uint32_t n = 1 + draw(max_vars);
    std::uint32_t m = 1 + draw(max_clauses);
    std::vector<Clause> cls(m);
    for (auto& c : cls)
      for (auto& l : c) {
        l.var = 1 + draw(n);
        l.positive = draw(2) == 1;
      }
    out.push_back(make_instance(n, std::move(cls)));
  }
  return out;
}

std::vector<QbfInstance> polarity_instances() {
  std::vector<QbfInstance> out;
  for (unsigned mask = 0; mask < 8; ++mask) {
    Clause c{Literal{1, (mask & 1U) != 0}, Literal{2, (mask & 2U) != 0}, Literal{3, (mask & 4U) != 0}};
    out.push_back(make_instance(3, {c}));
  }
  return out;
}

ClaimReport verify_equivalence_batch(const std::vector<QbfInstance>& instances, const std::string& range,
                                     int jobs, const EquivalenceOptions& options) {
  ClaimReport rep;
  rep.claim = "qbf_equivalence";
  rep.range = range;
  rep.cases = parallel_map(instances.size(), jobs, [&](std::size_t i) {
    return check_equivalence_case(instances[i], options);
  });
  rep.settle();
  return rep;
}

}  // namespace toggle
