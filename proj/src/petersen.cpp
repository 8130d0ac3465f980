#include "toggle/petersen.hpp"

#include <algorithm>
#include <sstream>

#include "toggle/errors.hpp"
#include "toggle/parallel.hpp"

namespace toggle {

const char* to_string(PetersenTag tag) {
  switch (tag) {
    case PetersenTag::P01: return "01";
    case PetersenTag::P10: return "10";
    case PetersenTag::P11: return "11";
  }
  return "?";
}

PetersenTag parse_petersen_tag(std::string_view text) {
  if (!text.empty() && (text.front() == 'P' || text.front() == 'p')) text.remove_prefix(1);
  if (text == "01") return PetersenTag::P01;
  if (text == "10") return PetersenTag::P10;
  if (text == "11") return PetersenTag::P11;
  throw InputError("unknown Petersen variant '" + std::string(text) + "' (expected 01, 10 or 11)");
}

GamePosition make_petersen_position(const PetersenVariant& v) {
  auto g = build_petersen(v.m, v.k);
  const PetersenIndex at{v.m};
  PackedBits w(2 * v.m);
  for (std::size_t j = 1; j <= v.m; ++j) {
    w.set(at.outer(j), v.tag != PetersenTag::P10);
    w.set(at.inner(j), v.tag != PetersenTag::P01);
  }
  return GamePosition(std::move(g), w);
}

namespace {

SolverOptions solver_options(const LabOptions& o) {
  SolverOptions s;
  s.memo_limit = o.memo_limit;
  return s;
}

}  // namespace

std::vector<TableRow> nimber_table(const std::vector<PetersenTag>& tags, std::size_t m_lo,
                                   std::size_t m_hi, std::size_t k_lo, std::size_t k_hi,
                                   const LabOptions& options) {
  if (m_lo < 3) throw InputError("table needs m >= 3");
  if (k_lo < 1) throw InputError("table needs k >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> graphs;
  for (std::size_t m = m_lo; m <= m_hi; ++m)
    for (std::size_t k = k_lo; k <= k_hi && k < m; ++k) graphs.emplace_back(m, k);

  auto cells = parallel_map(graphs.size(), options.jobs, [&](std::size_t i) {
    const auto [m, k] = graphs[i];
    GrundySolver solver(solver_options(options));
    std::vector<TableRow> rows;
    for (PetersenTag tag : tags) {
      TableRow row{tag, m, k, std::nullopt};
      try {
        row.nimber = solver.grundy(make_petersen_position({tag, m, k}));
      } catch (const ResourceError&) {
      }
      rows.push_back(row);
    }
    return rows;
  });
  std::vector<TableRow> out;
  for (auto& c : cells) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "variant,m,k,nimber\n";
  for (const auto& r : rows) {
    os << to_string(r.tag) << ',' << r.m << ',' << r.k << ',';
    if (r.nimber) {
      os << *r.nimber;
    } else {
      os << "unsolved";
    }
    os << '\n';
  }
  return os.str();
}

const char* to_string(ClaimId id) {
  switch (id) {
    case ClaimId::ThreeKEven: return "thm_3k_even";
    case ClaimId::Bounds: return "thm_bounds";
    case ClaimId::Isomorphism: return "cor_isomorphism";
    case ClaimId::FourEqual: return "thm_four_equal";
    case ClaimId::EvenCycleZero: return "thm_even_cycle_zero";
  }
  return "?";
}

ClaimId parse_claim_id(std::string_view text) {
  for (ClaimId id : {ClaimId::ThreeKEven, ClaimId::Bounds, ClaimId::Isomorphism, ClaimId::FourEqual,
                     ClaimId::EvenCycleZero})
    if (text == to_string(id)) return id;
  throw InputError("unknown claim '" + std::string(text) + "'");
}

namespace {

// A case is a set of positions on one graph plus a predicate on their values.
struct CaseSpec {
  std::string params;
  std::vector<std::pair<std::string, PetersenVariant>> positions;
  bool (*check)(const std::vector<Nimber>&);
};

std::string name(const PetersenVariant& v) {
  return std::string("P") + to_string(v.tag) + "(" + std::to_string(v.m) + "," +
         std::to_string(v.k) + ")";
}

bool all_equal(const std::vector<Nimber>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

std::vector<CaseSpec> plan(ClaimId claim, const ClaimLimits& lim, std::string& range) {
  std::vector<CaseSpec> specs;
  auto add = [&](std::string params, std::vector<PetersenVariant> vs,
                 bool (*check)(const std::vector<Nimber>&)) {
    CaseSpec s{std::move(params), {}, check};
    for (const auto& v : vs) s.positions.emplace_back(name(v), v);
    specs.push_back(std::move(s));
  };
  using T = PetersenTag;
  switch (claim) {
    case ClaimId::ThreeKEven: {
      range = "k in {";
      for (std::size_t i = 0; i < lim.ks.size(); ++i) range += (i ? "," : "") + std::to_string(lim.ks[i]);
      range += "}";
      for (std::size_t k : lim.ks) {
        if (k < 1) throw InputError("thm_3k_even needs k >= 1");
        add("k=" + std::to_string(k), {{T::P10, 3 * k, k}},
            [](const std::vector<Nimber>& v) { return v[0] == 0; });
      }
      break;
    }
    case ClaimId::Bounds:
      range = std::to_string(lim.m_min) + " <= m <= " + std::to_string(lim.m_max) +
              ", 1 <= k <= (m-1)/2";
      for (std::size_t m = std::max<std::size_t>(lim.m_min, 3); m <= lim.m_max; ++m)
        for (std::size_t k = 1; k <= (m - 1) / 2; ++k)
          add("m=" + std::to_string(m) + " k=" + std::to_string(k),
              {{T::P11, m, k}, {T::P01, m, k}, {T::P10, m, k}},
              [](const std::vector<Nimber>& v) { return v[0] <= 2 && v[1] <= 1 && v[2] <= 1; });
      break;
    case ClaimId::Isomorphism:
      range = std::to_string(lim.m_min) + " <= m <= " + std::to_string(lim.m_max) +
              ", 1 <= k1 <= k2 <= m-1, k1*k2 = 1 mod m";
      for (std::size_t m = std::max<std::size_t>(lim.m_min, 3); m <= lim.m_max; ++m)
        for (std::size_t k1 = 1; k1 < m; ++k1)
          for (std::size_t k2 = k1; k2 < m; ++k2) {
            if (k1 * k2 % m != 1) continue;
            const std::string p = "m=" + std::to_string(m) + " k1=" + std::to_string(k1) +
                                  " k2=" + std::to_string(k2);
            // the isomorphism swaps inner and outer vertices, so the
            // canonical assignments correspond as 11<->11, 01<->10, 10<->01
            add(p + " all-on", {{T::P11, m, k1}, {T::P11, m, k2}}, all_equal);
            add(p + " inner-off", {{T::P01, m, k1}, {T::P10, m, k2}}, all_equal);
            add(p + " outer-off", {{T::P10, m, k1}, {T::P01, m, k2}}, all_equal);
          }
      break;
    case ClaimId::FourEqual:
      range = std::to_string(std::max<std::size_t>(lim.m_min, 5)) + " <= m <= " +
              std::to_string(lim.m_max);
      for (std::size_t m = std::max<std::size_t>(lim.m_min, 5); m <= lim.m_max; ++m)
        add("m=" + std::to_string(m),
            {{T::P01, m, 1}, {T::P10, m, 1}, {T::P01, m, 2}, {T::P10, m, 2}}, all_equal);
      break;
    case ClaimId::EvenCycleZero:
      range = "k >= 3, 2k <= " + std::to_string(lim.m_max);
      for (std::size_t k = 3; 2 * k <= lim.m_max; ++k) {
        if (2 * k < lim.m_min) continue;
        add("k=" + std::to_string(k), {{T::P01, 2 * k, 1}},
            [](const std::vector<Nimber>& v) { return v[0] == 0; });
      }
      break;
  }
  return specs;
}

ClaimCase run_case(const CaseSpec& spec, const LabOptions& options) {
  ClaimCase c;
  c.params = spec.params;
  GrundySolver solver(solver_options(options));
  std::vector<Nimber> values;
  try {
    for (const auto& [label, v] : spec.positions) {
      values.push_back(solver.grundy(make_petersen_position(v)));
      c.values.emplace_back(label, values.back());
    }
  } catch (const ResourceError& e) {
    c.solved = false;
    c.note = e.what();
    return c;
  }
  c.ok = spec.check(values);
  return c;
}

}  // namespace

ClaimReport verify_claim(ClaimId claim, const ClaimLimits& limits, const LabOptions& options) {
  ClaimReport report;
  report.claim = to_string(claim);
  const auto specs = plan(claim, limits, report.range);
  report.cases = parallel_map(specs.size(), options.jobs,
                              [&](std::size_t i) { return run_case(specs[i], options); });
  report.settle();
  if (report.status == ClaimStatus::Violated) {
    // recompute the failing case from scratch before reporting it
    for (std::size_t i = 0; i < specs.size(); ++i) {
      if (specs[i].params != *report.counterexample) continue;
      const ClaimCase again = run_case(specs[i], options);
      if (again.ok || again.values != report.cases[i].values)
        throw std::logic_error("counterexample " + specs[i].params + " does not reproduce");
    }
  }
  return report;
}

}  // namespace toggle
