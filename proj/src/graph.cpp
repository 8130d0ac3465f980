#include "toggle/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

#include "toggle/errors.hpp"

namespace toggle {

PackedBits PackedBits::from_string(std::string_view bits) {
  PackedBits out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw InputError("weight string may contain only 0 and 1");
    }
  }
  return out;
}

std::string PackedBits::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

// ---- Graph -------------------------------------------------------------------

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) { finalize(); }

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges, std::vector<std::string> labels)
    : adjacency_(vertex_count), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count)
    throw InputError("label count does not match vertex count");
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw InputError("duplicate edge");
  }
  if (std::all_of(labels_.begin(), labels_.end(), [](const auto& s) { return s.empty(); }))
    labels_.clear();
  finalize();
}

void Graph::finalize() {
  const std::size_t n = adjacency_.size();
  closed_.assign(n, PackedBits(n));
  edge_count_ = 0;
  for (std::size_t v = 0; v < n; ++v) {
    closed_[v].set(v);
    for (Vertex u : adjacency_[v]) closed_[v].set(u);
    edge_count_ += adjacency_[v].size();
  }
  edge_count_ /= 2;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : adjacency_) d = std::max(d, nb.size());
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

const std::string& Graph::label(Vertex v) const {
  static const std::string kEmpty;
  return labels_.empty() ? kEmpty : labels_[v];
}

std::vector<std::vector<Vertex>> Graph::components() const {
  const std::size_t n = vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      out.back().push_back(v);
      for (Vertex u : adjacency_[v]) {
        if (comp[u] < 0) {
          comp[u] = id;
          q.push(u);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> remap(vertex_count(), static_cast<Vertex>(-1));
  for (std::size_t k = 0; k < vertices.size(); ++k) remap[vertices[k]] = static_cast<Vertex>(k);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (Vertex u : adjacency_[vertices[k]]) {
      Vertex r = remap[u];
      if (r != static_cast<Vertex>(-1) && k < r) edges.emplace_back(static_cast<Vertex>(k), r);
    }
    if (has_labels()) labels.push_back(labels_[vertices[k]]);
  }
  return Graph(vertices.size(), edges, std::move(labels));
}

std::string Graph::structure_id() const {
  std::string id = std::to_string(vertex_count());
  for (const auto& nb : adjacency_) {
    id += '|';
    for (Vertex u : nb) {
      id += std::to_string(u);
      id += ',';
    }
  }
  return id;
}

// ---- GraphBuilder ------------------------------------------------------------

Vertex GraphBuilder::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<Vertex>(labels_.size() - 1);
}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u >= labels_.size() || v >= labels_.size())
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size()) return false;
  return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (!add_edge_if_absent(u, v))
    throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

bool GraphBuilder::add_edge_if_absent(Vertex u, Vertex v) {
  check(u, v);
  if (adj_.size() < labels_.size()) adj_.resize(labels_.size());
  if (has_edge(u, v)) return false;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  edges_.emplace_back(u, v);
  return true;
}

void GraphBuilder::set_label(Vertex v, std::string label) {
  if (v >= labels_.size()) throw InputError("label index out of range");
  labels_[v] = std::move(label);
}

Graph GraphBuilder::build() const { return Graph(labels_.size(), edges_, labels_); }

// ---- GamePosition ------------------------------------------------------------

GamePosition::GamePosition(std::shared_ptr<const Graph> graph, WeightAssignment weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (weights_.size() != graph_->vertex_count())
    throw InputError("weight assignment has " + std::to_string(weights_.size()) +
                     " entries for a graph with " + std::to_string(graph_->vertex_count()) +
                     " vertices");
}

GamePosition GamePosition::all_ones(std::shared_ptr<const Graph> graph) {
  const auto n = graph->vertex_count();
  return GamePosition(std::move(graph), WeightAssignment(n, true));
}

// ---- generators --------------------------------------------------------------

Graph build_path(std::size_t n) {
  if (n < 1) throw InputError("path needs at least 1 vertex");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph build_cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph(n, e);
}

Graph build_lattice2(std::size_t m) {
  if (m < 1) throw InputError("lattice2 needs m >= 1");
  const LatticeIndex at{m};
  std::vector<Edge> e;
  for (int row = 0; row < 2; ++row)
    for (std::size_t j = 1; j < m; ++j) e.emplace_back(at(row, j), at(row, j + 1));
  for (std::size_t j = 1; j <= m; ++j) e.emplace_back(at(0, j), at(1, j));
  return Graph(2 * m, e);
}

Graph build_basic(BasicKind kind, std::size_t n) {
  switch (kind) {
    case BasicKind::Path: return build_path(n);
    case BasicKind::Cycle: return build_cycle(n);
    case BasicKind::Lattice2: return build_lattice2(n);
  }
  throw InputError("unknown graph kind");
}

Graph build_petersen(std::size_t m, std::size_t k) {
  if (m < 3) throw InputError("P(m,k) needs m >= 3");
  if (k < 1 || k >= m) throw InputError("P(m,k) needs 1 <= k < m");
  const PetersenIndex at{m};
  GraphBuilder b(2 * m);
  for (std::size_t j = 1; j <= m; ++j) {
    b.add_edge(at.outer(j), at.outer(j % m + 1));
    b.add_edge(at.outer(j), at.inner(j));
  }
  for (std::size_t j = 1; j <= m; ++j) b.add_edge_if_absent(at.inner(j), at.inner((j - 1 + k) % m + 1));
  return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.vertex_count());
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (Vertex v = 0; v < a.vertex_count(); ++v) labels.push_back(a.label(v));
    for (Vertex v = 0; v < b.vertex_count(); ++v) labels.push_back(b.label(v));
  }
  return Graph(a.vertex_count() + b.vertex_count(), edges, std::move(labels));
}

WeightAssignment concat_weights(const WeightAssignment& a, const WeightAssignment& b) {
  WeightAssignment out(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a.test(i));
  for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b.test(i));
  return out;
}

// ---- text format -------------------------------------------------------------

std::string serialize_graph(const Graph& g, const std::optional<WeightAssignment>& w) {
  std::ostringstream os;
  os << "toggle-graph 1\n";
  os << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  if (w) {
    if (w->size() != g.vertex_count()) throw InputError("weight length mismatch");
    os << "w " << w->to_string() << '\n';
  }
  if (g.has_labels()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!g.label(v).empty()) os << "l " << v << ' ' << g.label(v) << '\n';
  }
  return os.str();
}

namespace {

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

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

std::size_t to_index(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  bool header = false;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::optional<WeightAssignment> weights;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::vector<std::vector<Vertex>> seen;

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!header) {
      if (tok.size() != 2 || tok[0] != "toggle-graph" || tok[1] != "1")
        fail(line_no, "expected header 'toggle-graph 1'");
      header = true;
    } else if (tok[0] == "n") {
      if (n) fail(line_no, "duplicate 'n' line");
      if (tok.size() != 2) fail(line_no, "expected 'n <count>'");
      n = to_index(tok[1], line_no);
      seen.assign(*n, {});
    } else {
      if (!n) fail(line_no, "'" + std::string(tok[0]) + "' before 'n' line");
      if (tok[0] == "e") {
        if (tok.size() != 3) fail(line_no, "expected 'e <u> <v>'");
        auto u = to_index(tok[1], line_no), v = to_index(tok[2], line_no);
        if (u >= *n || v >= *n) fail(line_no, "vertex index out of range");
        if (u == v) fail(line_no, "self-loop");
        auto& su = seen[u];
        if (std::find(su.begin(), su.end(), v) != su.end()) fail(line_no, "duplicate edge");
        seen[u].push_back(static_cast<Vertex>(v));
        seen[v].push_back(static_cast<Vertex>(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      } else if (tok[0] == "w") {
        if (weights) fail(line_no, "duplicate 'w' line");
        std::string_view bits = tok.size() >= 2 ? tok[1] : std::string_view{};
        if (tok.size() > 2) fail(line_no, "expected 'w <bitstring>'");
        if (bits.size() != *n)
          fail(line_no, "weight string has length " + std::to_string(bits.size()) + ", expected " +
                            std::to_string(*n));
        try {
          weights = PackedBits::from_string(bits);
        } catch (const InputError& e) {
          fail(line_no, e.what());
        }
      } else if (tok[0] == "l") {
        if (tok.size() != 3) fail(line_no, "expected 'l <index> <label>'");
        auto v = to_index(tok[1], line_no);
        if (v >= *n) fail(line_no, "label index out of range");
        if (labels.empty()) labels.resize(*n);
        labels[v] = std::string(tok[2]);
      } else {
        fail(line_no, "unknown record '" + std::string(tok[0]) + "'");
      }
    }
    if (end == text.size()) break;
  }
  if (!header) fail(line_no, "missing header 'toggle-graph 1'");
  if (!n) fail(line_no, "missing 'n' line");
  return ParsedGraph{Graph(*n, edges, std::move(labels)), std::move(weights)};
}

}  // namespace toggle
