#pragma once

// Deliberately naive reference evaluator used only by the tests: plain
// recursion over weight strings, legality from the sigma definition, no
// decomposition, no shared code with the library solver.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Game {
  std::vector<std::vector<int>> adj;

  explicit Game(int n) : adj(static_cast<std::size_t>(n)) {}
  void edge(int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  int size() const { return static_cast<int>(adj.size()); }

  int sigma(const std::string& w, int v) const {
    int s = w[static_cast<std::size_t>(v)] == '1';
    for (int u : adj[static_cast<std::size_t>(v)]) s += w[static_cast<std::size_t>(u)] == '1';
    return s;
  }

  std::string flip(std::string w, int v) const {
    auto f = [&](int x) {
      auto& c = w[static_cast<std::size_t>(x)];
      c = c == '1' ? '0' : '1';
    };
    f(v);
    for (int u : adj[static_cast<std::size_t>(v)]) f(u);
    return w;
  }

  bool legal(const std::string& w, int v) const {
    return w[static_cast<std::size_t>(v)] == '1' && sigma(flip(w, v), v) < sigma(w, v);
  }

  std::vector<std::string> successors(const std::string& w) const {
    std::vector<std::string> out;
    for (int v = 0; v < size(); ++v)
      if (legal(w, v)) out.push_back(flip(w, v));
    return out;
  }

  int grundy(const std::string& w) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    std::set<int> seen;
    for (const auto& s : successors(w)) seen.insert(grundy(s));
    int g = 0;
    while (seen.count(g)) ++g;
    memo[w] = g;
    return g;
  }

  std::map<std::string, int> memo;
};

}  // namespace oracle
