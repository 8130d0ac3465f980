#include "toggle/heap.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "toggle/errors.hpp"
#include "toggle/graph.hpp"

namespace toggle {

OctalCode OctalCode::parse(std::string_view text) {
  static constexpr std::string_view kMiddleDot = "\xC2\xB7";
  if (text.starts_with("0.")) {
    text.remove_prefix(2);
  } else if (text.starts_with(".")) {
    text.remove_prefix(1);
  } else if (text.starts_with(kMiddleDot)) {
    text.remove_prefix(kMiddleDot.size());
  }
  if (text.empty()) throw InputError("empty octal code");
  OctalCode code;
  for (char c : text) {
    if (c < '0' || c > '7') throw InputError("octal code digit '" + std::string(1, c) + "' not in 0..7");
    code.digits.push_back(c - '0');
  }
  return code;
}

std::string OctalCode::to_string() const {
  std::string s = ".";
  for (int d : digits) s += static_cast<char>('0' + d);
  return s;
}

std::vector<Nimber> octal_sequence(const OctalCode& code, std::size_t max_heap) {
  std::vector<Nimber> g(max_heap + 1, 0);
  std::vector<char> seen;
  for (std::size_t h = 1; h <= max_heap; ++h) {
    seen.assign(2 * h + 2, 0);
    auto mark = [&](Nimber v) {
      if (v >= seen.size()) seen.resize(v + 1, 0);
      seen[v] = 1;
    };
    for (std::size_t k = 1; k <= code.digits.size() && k <= h; ++k) {
      const int d = code.digits[k - 1];
      if ((d & 1) && h == k) mark(0);
      if ((d & 2) && h > k) mark(g[h - k]);
      if ((d & 4) && h - k >= 2)
        for (std::size_t a = 1; 2 * a <= h - k; ++a) mark(g[a] ^ g[h - k - a]);
    }
    Nimber v = 0;
    while (v < seen.size() && seen[v]) ++v;
    g[h] = v;
  }
  return g;
}

Nimber octal_grundy(const OctalCode& code, std::size_t heap) {
  return octal_sequence(code, heap)[heap];
}

std::set<HeapOutcome> octal_moves(const OctalCode& code, std::size_t heap) {
  std::set<HeapOutcome> out;
  for (std::size_t k = 1; k <= code.digits.size() && k <= heap; ++k) {
    const int d = code.digits[k - 1];
    if ((d & 1) && heap == k) out.insert({k, {}});
    if ((d & 2) && heap > k) out.insert({k, {heap - k}});
    if ((d & 4) && heap - k >= 2)
      for (std::size_t a = 1; 2 * a <= heap - k; ++a) out.insert({k, {a, heap - k - a}});
  }
  return out;
}

namespace {

// Vertices within distance 2 of v in the subgraph induced by `alive`.
std::vector<bool> remove_ball(const Graph& g, std::vector<bool> alive, Vertex v) {
  std::vector<Vertex> frontier{v}, ball{v};
  std::vector<bool> in_ball(g.vertex_count(), false);
  in_ball[v] = true;
  for (int step = 0; step < 2; ++step) {
    std::vector<Vertex> next;
    for (Vertex x : frontier)
      for (Vertex y : g.neighbors(x))
        if (alive[y] && !in_ball[y]) {
          in_ball[y] = true;
          next.push_back(y);
          ball.push_back(y);
        }
    frontier = std::move(next);
  }
  for (Vertex x : ball) alive[x] = false;
  return alive;
}

}  // namespace

std::set<HeapOutcome> jl_path_moves(std::size_t n) {
  std::set<HeapOutcome> out;
  if (n == 0) return out;
  const Graph path = build_path(n);
  for (Vertex v = 0; v < n; ++v) {
    auto alive = remove_ball(path, std::vector<bool>(n, true), v);
    std::vector<Vertex> keep;
    for (Vertex x = 0; x < n; ++x)
      if (alive[x]) keep.push_back(x);
    std::vector<std::size_t> heaps;
    for (const auto& comp : path.induced(keep).components()) heaps.push_back(comp.size());
    std::sort(heaps.begin(), heaps.end());
    out.insert({n - keep.size(), heaps});
  }
  return out;
}

const OctalCode& jl_octal_code() {
  static const OctalCode code = OctalCode::parse("11337");
  return code;
}

Nimber jl_grundy_direct(std::size_t m) {
  if (m < 3) throw InputError("Jacob's Ladder needs m >= 3");
  if (m > 20) throw ResourceError("direct Jacob's Ladder play limited to m <= 20");
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<std::int8_t> memo(std::size_t{1} << m, -1);
  auto alive_neighbors = [&](std::uint32_t alive, std::size_t x) {
    std::uint32_t out = 0;
    const std::size_t l = (x + m - 1) % m, r = (x + 1) % m;
    if (alive >> l & 1U) out |= std::uint32_t{1} << l;
    if (alive >> r & 1U) out |= std::uint32_t{1} << r;
    return out;
  };
  auto solve = [&](auto&& self, std::uint32_t alive) -> Nimber {
    if (alive == 0) return 0;
    if (memo[alive] >= 0) return static_cast<Nimber>(memo[alive]);
    std::uint64_t seen = 0;
    for (std::size_t v = 0; v < m; ++v) {
      if (!(alive >> v & 1U)) continue;
      std::uint32_t ball = std::uint32_t{1} << v;
      const std::uint32_t ring1 = alive_neighbors(alive, v);
      ball |= ring1;
      for (std::uint32_t rest = ring1; rest != 0; rest &= rest - 1)
        ball |= alive_neighbors(alive, static_cast<std::size_t>(std::countr_zero(rest)));
      seen |= std::uint64_t{1} << self(self, alive & ~ball);
    }
    const auto g = static_cast<Nimber>(std::countr_one(seen));
    memo[alive] = static_cast<std::int8_t>(g);
    return g;
  };
  return solve(solve, full);
}

Nimber jl_grundy(std::size_t m) {
  if (m < 3) throw InputError("Jacob's Ladder needs m >= 3");
  const std::size_t rest = m > 5 ? m - 5 : 0;
  return mex({octal_grundy(jl_octal_code(), rest)});
}

Nimber jl_sum_grundy(std::span<const std::size_t> parts) {
  Nimber g = 0;
  for (std::size_t m : parts) g ^= jl_grundy(m);
  return g;
}

std::vector<Nimber> transform_octal_to_p01(std::span<const Nimber> seq) {
  if (seq.size() < 3) throw InputError("transform needs at least 3 entries");
  std::vector<Nimber> out;
  for (std::size_t i = 3; i < seq.size(); ++i) out.push_back(seq[i] == 0 ? 1 : 0);
  return out;
}

BFile parse_bfile(std::string_view text) {
  BFile out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto fail = [&](const std::string& what) {
      throw InputError("line " + std::to_string(line_no) + ": " + what);
    };
    std::int64_t index = 0, value = 0;
    const char* p = line.data();
    const char* e = line.data() + line.size();
    auto r1 = std::from_chars(p, e, index);
    if (r1.ec != std::errc() || r1.ptr == e || (*r1.ptr != ' ' && *r1.ptr != '\t'))
      fail("expected 'index value'");
    p = r1.ptr;
    while (p < e && (*p == ' ' || *p == '\t')) ++p;
    auto r2 = std::from_chars(p, e, value);
    if (r2.ec != std::errc() || r2.ptr != e) fail("expected 'index value'");
    if (first) {
      out.first_index = index;
      first = false;
    } else if (index != out.first_index + static_cast<std::int64_t>(out.values.size())) {
      fail("index " + std::to_string(index) + " breaks the consecutive run (expected " +
           std::to_string(out.first_index + static_cast<std::int64_t>(out.values.size())) + ")");
    }
    out.values.push_back(value);
  }
  return out;
}

SequenceCheckReport crosscheck(std::span<const std::int64_t> computed,
                               std::span<const std::int64_t> reference, std::ptrdiff_t offset,
                               std::string sequence) {
  SequenceCheckReport r;
  r.sequence = std::move(sequence);
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) + offset;
    if (j < 0 || j >= static_cast<std::ptrdiff_t>(reference.size())) continue;
    ++r.compared;
    if (computed[i] != reference[static_cast<std::size_t>(j)]) {
      r.first_mismatch = i;
      r.computed_value = computed[i];
      r.reference_value = reference[static_cast<std::size_t>(j)];
      break;
    }
  }
  return r;
}

std::vector<std::ptrdiff_t> matching_offsets(std::span<const Nimber> seq,
                                             std::span<const Nimber> target,
                                             std::ptrdiff_t target_first, std::ptrdiff_t lo,
                                             std::ptrdiff_t hi, std::size_t min_overlap) {
  std::vector<std::ptrdiff_t> out;
  for (std::ptrdiff_t o = lo; o <= hi; ++o) {
    std::size_t overlap = 0;
    bool ok = true;
    for (std::size_t t = 0; t < seq.size() && ok; ++t) {
      const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(t) + o - target_first;
      if (j < 0 || j >= static_cast<std::ptrdiff_t>(target.size())) continue;
      ++overlap;
      ok = seq[t] == target[static_cast<std::size_t>(j)];
    }
    if (ok && overlap >= min_overlap) out.push_back(o);
  }
  return out;
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("TOGGLE_DATA_DIR"); env && *env) return env;
  return TOGGLE_DEFAULT_DATA_DIR;
}

namespace {

std::string bfile_name(std::string_view id) {
  if (id.size() != 7 || (id[0] != 'A' && id[0] != 'a') ||
      !std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError("sequence id must look like A071426, got '" + std::string(id) + "'");
  return "b" + std::string(id.substr(1)) + ".txt";
}

}  // namespace

BFile load_snapshot(std::string_view id, const std::filesystem::path& dir) {
  const auto path = dir / bfile_name(id);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_bfile(ss.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace toggle
