#include <algorithm>
#include <map>
#include <set>

#include "toggle/engine.hpp"
#include "toggle/errors.hpp"

namespace toggle {

namespace {

using Matrix = std::vector<std::vector<bool>>;

// Colour refinement: a vertex's new colour is the rank of (colour, sorted
// neighbour colours). Ranks depend only on invariant data.
std::vector<int> refine(const Matrix& adj, std::vector<int> colors) {
  const std::size_t n = adj.size();
  std::size_t classes = std::set<int>(colors.begin(), colors.end()).size();
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(colors[v]);
      std::vector<int> nb;
      for (std::size_t u = 0; u < n; ++u)
        if (adj[v][u]) nb.push_back(colors[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v)
      colors[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                   distinct.begin());
    if (distinct.size() == classes) return colors;
    classes = distinct.size();
  }
}

std::vector<std::uint8_t> encode(const Matrix& adj, const std::vector<int>& label) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> at(n);
  for (std::size_t v = 0; v < n; ++v) at[static_cast<std::size_t>(label[v])] = v;
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(adj[at[i]][at[j]] ? 1 : 0);
  return out;
}

void search(const Matrix& adj, const std::vector<int>& colors, std::vector<std::uint8_t>& best) {
  const std::size_t n = adj.size();
  std::vector<int> size(n, 0);
  for (int c : colors) ++size[static_cast<std::size_t>(c)];
  int target = -1;
  for (std::size_t c = 0; c < n; ++c) {
    if (size[c] > 1) {
      target = static_cast<int>(c);
      break;
    }
  }
  if (target < 0) {
    auto cert = encode(adj, colors);
    if (best.empty() || cert < best) best = std::move(cert);
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    std::vector<int> next(n);
    for (std::size_t u = 0; u < n; ++u)
      next[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
    search(adj, refine(adj, std::move(next)), best);
  }
}

Matrix to_matrix(const Graph& g) {
  Matrix adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

Graph decode(const std::vector<std::uint8_t>& cert) {
  const std::size_t n = cert[0];
  std::vector<Edge> edges;
  std::size_t k = 1;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (cert[k++]) edges.emplace_back(i, j);
  return Graph(n, edges);
}

bool connected(const Graph& g) { return g.vertex_count() == 0 || g.components().size() == 1; }

}  // namespace

std::vector<std::uint8_t> canonical_certificate(const Graph& g) {
  const Matrix adj = to_matrix(g);
  std::vector<std::uint8_t> best;
  if (adj.empty()) return {0};
  search(adj, refine(adj, std::vector<int>(adj.size(), 0)), best);
  return best;
}

std::vector<Graph> connected_graphs(std::size_t n, std::size_t max_degree) {
  if (n == 0) return {};
  if (n > 12) throw ResourceError("connected graph enumeration limited to 12 vertices");
  // Every connected graph has a vertex whose removal keeps it connected, so
  // adding one vertex at a time (joined to 1..max_degree unsaturated vertices)
  // reaches every class.
  std::map<std::vector<std::uint8_t>, Graph> level;
  Graph k1(1);
  level.emplace(canonical_certificate(k1), k1);
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::vector<std::uint8_t>, Graph> next;
    for (const auto& [cert, g] : level) {
      std::vector<Vertex> open;
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < max_degree) open.push_back(v);
      const std::size_t subsets = std::size_t{1} << open.size();
      for (std::size_t mask = 1; mask < subsets; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > max_degree) continue;
        auto edges = g.edges();
        const auto fresh = static_cast<Vertex>(g.vertex_count());
        for (std::size_t i = 0; i < open.size(); ++i)
          if (mask >> i & 1U) edges.emplace_back(open[i], fresh);
        Graph h(size, edges);
        auto c = canonical_certificate(h);
        if (!next.count(c)) next.emplace(c, decode(c));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [cert, g] : level) out.push_back(g);
  return out;
}

std::vector<Graph> connected_graphs_bruteforce(std::size_t n, std::size_t max_degree) {
  if (n == 0) return {};
  if (n > 7) throw ResourceError("brute-force enumeration limited to 7 vertices");
  std::vector<Edge> slots;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::map<std::vector<std::uint8_t>, Graph> found;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    std::vector<std::size_t> deg(n, 0);
    bool ok = true;
    for (std::size_t i = 0; i < slots.size() && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      edges.push_back(slots[i]);
      ok = ++deg[slots[i].first] <= max_degree && ++deg[slots[i].second] <= max_degree;
    }
    if (!ok) continue;
    Graph g(n, edges);
    if (!connected(g)) continue;
    auto c = canonical_certificate(g);
    if (!found.count(c)) found.emplace(c, decode(c));
  }
  std::vector<Graph> out;
  for (auto& [cert, g] : found) out.push_back(g);
  return out;
}

}  // namespace toggle
