#include "toggle/lattice.hpp"

#include <algorithm>
#include <mutex>

#include "toggle/engine.hpp"
#include "toggle/errors.hpp"
#include "toggle/parallel.hpp"

namespace toggle {

const char* to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::H: return "H";
    case LatticeKind::D: return "D";
    case LatticeKind::T: return "T";
    case LatticeKind::GridAllOnes: return "grid";
  }
  return "?";
}

GamePosition make_family(LatticeFamilyId id) {
  const std::size_t m = id.m;
  const std::size_t min_m = id.kind == LatticeKind::H || id.kind == LatticeKind::D ? 3
                            : id.kind == LatticeKind::T                            ? 2
                                                                                   : 1;
  if (m < min_m)
    throw InputError(std::string("family ") + to_string(id.kind) + " needs m >= " +
                     std::to_string(min_m));
  const LatticeIndex at{m};
  PackedBits w(2 * m, true);
  auto zero = [&](int row, std::size_t col) { w.set(at(row, col), false); };
  switch (id.kind) {
    case LatticeKind::H:
      zero(0, 1), zero(0, m), zero(1, 1), zero(1, m);
      if (m != 3) zero(1, 2), zero(1, m - 1);
      break;
    case LatticeKind::D:
      zero(0, 1), zero(0, m - 1), zero(0, m), zero(1, 1), zero(1, 2), zero(1, m);
      break;
    case LatticeKind::T:
      zero(0, m - 1), zero(0, m), zero(1, m);
      break;
    case LatticeKind::GridAllOnes:
      break;
  }
  return GamePosition(build_lattice2(m), w);
}

// ---- H / D recurrences -------------------------------------------------------

namespace {

struct HdMemo {
  std::mutex mutex;
  std::vector<Nimber> h{0, 0, 0};  // indices 0..2 unused
  std::vector<Nimber> d{0, 0, 0};
};

HdMemo& hd_memo() {
  static HdMemo memo;
  return memo;
}

// An empty option range must coincide with a terminal position.
void check_terminal(LatticeKind kind, std::size_t m) {
  if (m > 12) return;
  if (!playable_set(make_family({kind, m})).empty())
    throw std::logic_error(std::string("empty recurrence range but ") + to_string(kind) +
                           std::to_string(m) + " has moves");
}

Nimber mex_of(std::vector<Nimber>& values) {
  return mex(std::span<const Nimber>(values.data(), values.size()));
}

void extend_hd(HdMemo& memo, std::size_t m) {
  auto& h = memo.h;
  auto& d = memo.d;
  std::vector<Nimber> opts;
  for (std::size_t k = h.size(); k <= m; ++k) {
    opts.clear();
    const std::size_t s = (k + 1) / 2;
    for (std::size_t i = 3; i <= s; ++i) {
      opts.push_back(h[i] ^ h[k + 1 - i]);
      opts.push_back(d[i] ^ d[k + 1 - i]);
    }
    if (opts.empty()) check_terminal(LatticeKind::H, k);
    h.push_back(mex_of(opts));

    opts.clear();
    for (std::size_t i = 3; i + 2 <= k; ++i) opts.push_back(h[i] ^ d[k + 1 - i]);
    if (opts.empty()) check_terminal(LatticeKind::D, k);
    d.push_back(mex_of(opts));
  }
}

}  // namespace

Nimber grundy_H(std::size_t m) {
  if (m < 3) throw InputError("grundy_H needs m >= 3");
  auto& memo = hd_memo();
  std::lock_guard lock(memo.mutex);
  extend_hd(memo, m);
  return memo.h[m];
}

Nimber grundy_D(std::size_t m) {
  if (m < 3) throw InputError("grundy_D needs m >= 3");
  auto& memo = hd_memo();
  std::lock_guard lock(memo.mutex);
  extend_hd(memo, m);
  return memo.d[m];
}

Nimber grundy_Pm1_empty(std::size_t m) {
  if (m < 3) throw InputError("P(m,1) needs m >= 3");
  return grundy_H(m + 1) == 0 ? 1 : 0;
}

// ---- capped segments ---------------------------------------------------------

SegmentTables compute_segment_tables(std::size_t max_length) {
  const std::size_t n = std::max<std::size_t>(max_length, 3) + 1;
  SegmentTables t;
  t.ff.assign(n, 0);
  t.fc.assign(n, 0);
  t.cc_same.assign(n, 0);
  t.cc_diff.assign(n, 0);
  std::vector<char> seen;
  auto mex_seen = [&seen]() {
    Nimber g = 0;
    while (g < seen.size() && seen[g]) ++g;
    return g;
  };
  auto mark = [&seen](Nimber v) {
    if (v >= seen.size()) seen.resize(v + 1, 0);
    seen[v] = 1;
  };

  for (std::size_t l = 1; l < n; ++l) {
    // C-C: splitting at column i in row s leaves two C-C pieces; the
    // equal-row move at i = 3 is illegal only when i is also l - 2.
    if (l >= 3) {
      seen.assign(l + 2, 0);
      for (std::size_t i = 3; i + 2 <= l; ++i) {
        if (l != 5) mark(t.cc_same[i] ^ t.cc_same[l + 1 - i]);
        mark(t.cc_diff[i] ^ t.cc_diff[l + 1 - i]);
      }
      t.cc_same[l] = mex_seen();
      seen.assign(l + 2, 0);
      for (std::size_t i = 3; i + 2 <= l; ++i) {
        mark(t.cc_same[i] ^ t.cc_diff[l + 1 - i]);
        mark(t.cc_diff[i] ^ t.cc_same[l + 1 - i]);
      }
      t.cc_diff[l] = mex_seen();
    }
    // F-C: a corner move turns F into a C cap; a split keeps an F-C piece.
    if (l >= 3) {
      seen.assign(l + 2, 0);
      mark(t.cc_same[l]);
      mark(t.cc_diff[l]);
      for (std::size_t i = 2; i + 2 <= l; ++i) {
        mark(t.fc[i] ^ t.cc_same[l + 1 - i]);
        mark(t.fc[i] ^ t.cc_diff[l + 1 - i]);
      }
      t.fc[l] = mex_seen();
    }
    // F-F
    if (l == 1) {
      t.ff[l] = 1;
    } else {
      seen.assign(l + 2, 0);
      mark(t.fc[l]);
      for (std::size_t i = 2; i + 1 <= l; ++i) mark(t.fc[i] ^ t.fc[l + 1 - i]);
      t.ff[l] = mex_seen();
    }
  }
  return t;
}

SegmentValidation validate_segment_tables(std::size_t max_m, int jobs) {
  const SegmentTables t = compute_segment_tables(max_m);
  struct Case {
    LatticeKind kind;
    std::size_t m;
    Nimber table;
  };
  std::vector<Case> cases;
  for (std::size_t m = 1; m <= max_m; ++m) {
    cases.push_back({LatticeKind::GridAllOnes, m, t.ff[m]});
    if (m >= 2) cases.push_back({LatticeKind::T, m, t.fc[m]});
    if (m >= 3) cases.push_back({LatticeKind::H, m, t.cc_same[m]});
    if (m >= 3) cases.push_back({LatticeKind::D, m, t.cc_diff[m]});
  }
  auto oracle = parallel_map(cases.size(), jobs, [&](std::size_t i) {
    return GrundySolver().grundy(make_family({cases[i].kind, cases[i].m}));
  });
  SegmentValidation v{true, max_m, ""};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (oracle[i] != cases[i].table) {
      v.passed = false;
      v.detail = std::string(to_string(cases[i].kind)) + std::to_string(cases[i].m) + ": table " +
                 std::to_string(cases[i].table) + ", solver " + std::to_string(oracle[i]);
      break;
    }
  }
  return v;
}

namespace {

struct SegmentCache {
  std::once_flag validated;
  SegmentValidation validation;
  std::mutex mutex;
  SegmentTables tables;
  std::size_t length = 0;
};

SegmentCache& segment_cache() {
  static SegmentCache cache;
  return cache;
}

Nimber segment_value(LatticeKind kind, std::size_t m, const LatticeOptions& options) {
  auto& cache = segment_cache();
  std::call_once(cache.validated,
                 [&] { cache.validation = validate_segment_tables(options.validation_max_m); });
  if (!cache.validation.passed) {
    if (!options.allow_fallback)
      throw ResourceError("segment recurrence failed validation (" + cache.validation.detail +
                          ") and fallback is disabled");
    return GrundySolver().grundy(make_family({kind, m}));
  }
  std::lock_guard lock(cache.mutex);
  if (cache.length < m) {
    cache.length = std::max(m, 2 * cache.length);
    cache.tables = compute_segment_tables(cache.length);
  }
  return kind == LatticeKind::T ? cache.tables.fc[m] : cache.tables.ff[m];
}

}  // namespace

Nimber grundy_T(std::size_t m, const LatticeOptions& options) {
  if (m < 2) throw InputError("grundy_T needs m >= 2");
  return segment_value(LatticeKind::T, m, options);
}

Nimber grundy_grid_allones(std::size_t m, const LatticeOptions& options) {
  if (m < 1) throw InputError("grundy_grid_allones needs m >= 1");
  return segment_value(LatticeKind::GridAllOnes, m, options);
}

}  // namespace toggle
