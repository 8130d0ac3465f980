#include "toggle/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "toggle/engine.hpp"
#include "toggle/errors.hpp"
#include "toggle/graph.hpp"
#include "toggle/heap.hpp"
#include "toggle/lattice.hpp"
#include "toggle/petersen.hpp"
#include "toggle/qbf.hpp"
#include "toggle/solver.hpp"

namespace toggle::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Text, Csv, JsonLines };

struct Globals {
  int jobs = 1;
  std::string format = "text";
  std::size_t memo_limit = std::size_t{1} << 24;

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "json-lines") return Format::JsonLines;
    return Format::Text;
  }
};

std::size_t parse_size(const std::string& text, const std::string& what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || p != text.data() + text.size() || text.empty())
    throw InputError(what + ": expected a non-negative integer, got '" + text + "'");
  return v;
}

// "A..B" or a single "A".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const std::string& what) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    std::size_t v = parse_size(text, what);
    return {v, v};
  }
  std::size_t a = parse_size(text.substr(0, dots), what);
  std::size_t b = parse_size(text.substr(dots + 2), what);
  if (a > b) throw InputError(what + ": empty range '" + text + "'");
  return {a, b};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write to " + path + " failed");
}

GamePosition load_position(const std::string& path) {
  std::string text = read_file(path);
  ParsedGraph pg;
  try {
    pg = parse_graph(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
  if (pg.weights) return GamePosition(std::move(pg.graph), std::move(*pg.weights));
  return GamePosition::all_ones(std::move(pg.graph));
}

SolverOptions solver_options(const Globals& g) {
  SolverOptions o;
  o.memo_limit = g.memo_limit;
  o.jobs = g.jobs;
  return o;
}

std::vector<PetersenTag> parse_tags(const std::string& text) {
  std::vector<PetersenTag> tags;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part == "allones") part = "11";
    tags.push_back(parse_petersen_tag(part));
  }
  if (tags.empty()) throw InputError("no variant given");
  return tags;
}

std::vector<Vertex> parse_moves(const std::string& text) {
  std::vector<Vertex> moves;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto b = part.find_first_not_of(' ');
    auto e = part.find_last_not_of(' ');
    if (b == std::string::npos) throw InputError("empty entry in --moves");
    moves.push_back(static_cast<Vertex>(parse_size(part.substr(b, e - b + 1), "--moves")));
  }
  return moves;
}

ordered_json case_json(const ClaimReport& r, const ClaimCase& c) {
  ordered_json j;
  j["claim"] = r.claim;
  j["params"] = c.params;
  ordered_json vals = ordered_json::object();
  for (const auto& [k, v] : c.values) vals[k] = v;
  j["values"] = vals;
  j["solved"] = c.solved;
  j["ok"] = c.ok;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

int emit_report(const ClaimReport& r, Format fmt, std::ostream& out) {
  if (fmt == Format::JsonLines) {
    for (const auto& c : r.cases) out << case_json(r, c).dump() << '\n';
    ordered_json s;
    s["claim"] = r.claim;
    s["range"] = r.range;
    s["status"] = to_string(r.status);
    s["cases"] = r.cases.size();
    if (r.counterexample) s["counterexample"] = *r.counterexample;
    out << s.dump() << '\n';
  } else {
    out << r.claim << " [" << r.range << "]: " << to_string(r.status) << '\n';
    for (const auto& c : r.cases) {
      out << "  " << c.params;
      for (const auto& [k, v] : c.values) out << "  " << k << '=' << v;
      out << "  " << (!c.solved ? "unsolved" : c.ok ? "ok" : "FAIL");
      if (!c.note.empty()) out << "  (" << c.note << ')';
      out << '\n';
    }
    if (r.counterexample) out << "counterexample: " << *r.counterexample << '\n';
  }
  switch (r.status) {
    case ClaimStatus::Holds: return Success;
    case ClaimStatus::Violated: return Failure;
    case ClaimStatus::Incomplete: return OverBudget;
  }
  return Failure;
}

void emit_value(const std::string& key, std::int64_t value, Format fmt, std::ostream& out) {
  if (fmt == Format::JsonLines) {
    ordered_json j;
    j[key] = value;
    out << j.dump() << '\n';
  } else {
    out << value << '\n';
  }
}

// ---- subcommands -----------------------------------------------------------

struct NimberArgs {
  std::string graph, family, variant;
  std::size_t m = 0, k = 0;
};

int cmd_nimber(const NimberArgs& a, const Globals& g, std::ostream& out) {
  if (a.graph.empty() == a.family.empty()) throw InputError("nimber needs exactly one of --graph or --family");
  Nimber value = 0;
  if (!a.graph.empty()) {
    GrundySolver solver(solver_options(g));
    value = solver.grundy(load_position(a.graph));
  } else if (a.family == "petersen") {
    if (a.k == 0) throw InputError("petersen needs --k");
    PetersenTag tag = a.variant.empty() ? PetersenTag::P11 : parse_tags(a.variant).at(0);
    GrundySolver solver(solver_options(g));
    value = solver.grundy(make_petersen_position({tag, a.m, a.k}));
  } else {
    if (!a.variant.empty() && a.variant != "allones")
      throw InputError("family " + a.family + " supports only --variant allones");
    if (a.family == "lattice2") {
      if (a.m < 1) throw InputError("lattice2 needs --m >= 1");
      value = grundy_grid_allones(a.m);
    } else {
      BasicKind kind = a.family == "path" ? BasicKind::Path : BasicKind::Cycle;
      GrundySolver solver(solver_options(g));
      value = solver.grundy(GamePosition::all_ones(build_basic(kind, a.m)));
    }
  }
  emit_value("nimber", value, g.fmt(), out);
  return Success;
}

struct TableArgs {
  std::string variant = "01";
  std::string m_range = "3..12";
  std::string k_range = "1..2";
};

int cmd_table(const TableArgs& a, const Globals& g, std::ostream& out) {
  auto tags = parse_tags(a.variant);
  auto [m_lo, m_hi] = parse_range(a.m_range, "--m-range");
  auto [k_lo, k_hi] = parse_range(a.k_range, "--k-range");
  LabOptions lo;
  lo.jobs = g.jobs;
  lo.memo_limit = g.memo_limit;
  auto rows = nimber_table(tags, m_lo, m_hi, k_lo, k_hi, lo);
  bool complete = true;
  for (const auto& r : rows) complete = complete && r.nimber.has_value();
  switch (g.fmt()) {
    case Format::Csv:
      out << table_csv(rows);
      break;
    case Format::JsonLines:
      for (const auto& r : rows) {
        ordered_json j;
        j["variant"] = to_string(r.tag);
        j["m"] = r.m;
        j["k"] = r.k;
        j["nimber"] = r.nimber ? ordered_json(*r.nimber) : ordered_json(nullptr);
        out << j.dump() << '\n';
      }
      break;
    case Format::Text:
      out << std::left << std::setw(8) << "variant" << std::setw(5) << "m" << std::setw(5) << "k" << "nimber\n";
      for (const auto& r : rows) {
        out << std::setw(8) << to_string(r.tag) << std::setw(5) << r.m << std::setw(5) << r.k;
        if (r.nimber) out << *r.nimber << '\n';
        else out << "unsolved\n";
      }
      break;
  }
  return complete ? Success : OverBudget;
}

struct VerifyArgs {
  std::string claim;
  std::size_t m_min = 3, m_max = 12;
  std::vector<std::size_t> ks;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  std::size_t max_vars = 4, max_clauses = 3;
};

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  if (a.claim == "qbf_equivalence") {
    auto instances = sample_instances(a.samples, a.seed, a.max_vars, a.max_clauses);
    EquivalenceOptions eo;
    eo.memo_limit = g.memo_limit;
    eo.max_vars = std::max<std::size_t>(eo.max_vars, a.max_vars);
    eo.max_clauses = std::max<std::size_t>(eo.max_clauses, a.max_clauses);
    std::string range = std::to_string(a.samples) + " samples, seed " + std::to_string(a.seed) + ", n <= " +
                        std::to_string(a.max_vars) + ", m <= " + std::to_string(a.max_clauses);
    return emit_report(verify_equivalence_batch(instances, range, g.jobs, eo), g.fmt(), out);
  }
  ClaimLimits limits;
  limits.m_min = a.m_min;
  limits.m_max = a.m_max;
  if (!a.ks.empty()) limits.ks = a.ks;
  LabOptions lo;
  lo.jobs = g.jobs;
  lo.memo_limit = g.memo_limit;
  return emit_report(verify_claim(parse_claim_id(a.claim), limits, lo), g.fmt(), out);
}

QbfInstance load_cnf(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_dimacs(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

int cmd_reduce(const std::string& cnf, const std::string& out_path, const Globals& g, std::ostream& out) {
  auto art = build_reduction(load_cnf(cnf));
  write_file(out_path, serialize_graph(art.graph, art.weights));
  if (g.fmt() == Format::JsonLines) {
    ordered_json j;
    j["vertices"] = art.graph.vertex_count();
    j["edges"] = art.graph.edge_count();
    j["out"] = out_path;
    out << j.dump() << '\n';
  } else {
    out << "vertices " << art.graph.vertex_count() << "\nedges " << art.graph.edge_count() << '\n';
  }
  return Success;
}

int cmd_qbf_check(const std::string& cnf, const Globals& g, std::ostream& out) {
  auto inst = load_cnf(cnf);
  EquivalenceOptions eo;
  eo.memo_limit = g.memo_limit;
  return emit_report(verify_equivalence(inst, eo), g.fmt(), out);
}

struct OeisArgs {
  std::string seq;
  std::string bfile;
  std::size_t count = 101;
  bool fetch = false;
  std::string base_url = "https://oeis.org";
};

int cmd_oeis(const OeisArgs& a, const Globals& g, std::ostream& out) {
  BFile ref;
  std::string source;
  if (!a.bfile.empty()) {
    source = a.bfile;
    try {
      ref = parse_bfile(read_file(a.bfile));
    } catch (const InputError& e) {
      throw InputError(a.bfile + ": " + e.what());
    }
  } else if (a.fetch) {
    source = a.base_url;
    ref = parse_bfile(fetch_bfile(a.seq, a.base_url));
  } else {
    source = (data_dir() / ("b" + a.seq.substr(1) + ".txt")).string();
    ref = load_snapshot(a.seq);
  }

  std::vector<std::int64_t> computed;
  std::int64_t first = 0;  // index of computed[0] in the sequence's own numbering
  if (a.seq == "A071426") {
    if (a.count == 0) throw InputError("--count must be positive");
    for (Nimber v : octal_sequence(jl_octal_code(), a.count - 1)) computed.push_back(v);
  } else {
    first = 3;
    LabOptions lo;
    lo.jobs = g.jobs;
    lo.memo_limit = g.memo_limit;
    auto rows = nimber_table({PetersenTag::P01}, 3, 3 + a.count - 1, 1, 1, lo);
    for (const auto& r : rows) {
      if (!r.nimber) throw ResourceError("P01(" + std::to_string(r.m) + ",1) exceeded the solver budget");
      computed.push_back(*r.nimber);
    }
  }
  auto rep = crosscheck(computed, ref.values, static_cast<std::ptrdiff_t>(first - ref.first_index), a.seq);
  const bool covered = rep.compared == computed.size();
  const bool ok = !rep.first_mismatch && covered;
  if (g.fmt() == Format::JsonLines) {
    ordered_json j;
    j["sequence"] = a.seq;
    j["source"] = source;
    j["requested"] = computed.size();
    j["compared"] = rep.compared;
    if (rep.first_mismatch) {
      j["mismatch_index"] = first + static_cast<std::int64_t>(*rep.first_mismatch);
      j["computed"] = rep.computed_value;
      j["reference"] = rep.reference_value;
    }
    j["ok"] = ok;
    out << j.dump() << '\n';
  } else {
    out << a.seq << ": compared " << rep.compared << " of " << computed.size() << " terms against " << source
        << '\n';
    if (rep.first_mismatch)
      out << "first mismatch at index " << first + static_cast<std::int64_t>(*rep.first_mismatch)
          << ": computed " << rep.computed_value << ", reference " << rep.reference_value << '\n';
    else if (!covered)
      out << "reference too short\n";
    else
      out << "no mismatch\n";
  }
  return ok ? Success : Failure;
}

int cmd_replay(const std::string& graph, const std::string& moves, const Globals& g, std::ostream& out) {
  GamePosition pos = load_position(graph);
  auto seq = parse_moves(moves);
  MoveTrace trace;
  try {
    trace = replay(pos, seq);
  } catch (const RuleViolation& e) {
    out << "illegal: " << e.what() << '\n';
    return Failure;
  }
  for (std::size_t t = 0; t < trace.positions.size(); ++t) {
    const auto& p = trace.positions[t];
    auto play = playable_set(p);
    if (g.fmt() == Format::JsonLines) {
      ordered_json j;
      j["stage"] = t;
      if (t > 0) j["move"] = trace.moves[t - 1];
      j["weights"] = p.weights().to_string();
      j["playable"] = play;
      out << j.dump() << '\n';
    } else {
      out << "stage " << t;
      if (t > 0) out << " after " << trace.moves[t - 1];
      out << ": " << p.weights().to_string() << "  playable {";
      for (std::size_t i = 0; i < play.size(); ++i) out << (i ? "," : "") << play[i];
      out << "}\n";
    }
  }
  return Success;
}

int cmd_jl(std::size_t m, const Globals& g, std::ostream& out) {
  if (m < 3) throw InputError("jl needs --m >= 3");
  emit_value("nimber", jl_grundy(m), g.fmt(), out);
  return Success;
}

std::size_t memo_limit_from_env() {
  const char* env = std::getenv("TOGGLE_MEMO_LIMIT");
  if (!env || !*env) return std::size_t{1} << 24;
  std::size_t v = parse_size(env, "TOGGLE_MEMO_LIMIT");
  if (v == 0) throw InputError("TOGGLE_MEMO_LIMIT must be positive");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toggle game toolkit", "toggle"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--format", g.format, "text | csv | json-lines")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}));
  app.fallthrough();

  NimberArgs na;
  auto* nimber = app.add_subcommand("nimber", "Nimber of a graph file or a named family");
  nimber->add_option("--graph", na.graph, "toggle-graph file (all-ones when it has no w line)");
  nimber->add_option("--family", na.family)->check(CLI::IsMember({"path", "cycle", "lattice2", "petersen"}));
  nimber->add_option("--m", na.m);
  nimber->add_option("--k", na.k);
  nimber->add_option("--variant", na.variant, "01 | 10 | 11 | allones");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Petersen Nimber table");
  table->add_option("--variant", ta.variant, "comma list of 01, 10, 11");
  table->add_option("--m-range", ta.m_range, "A..B");
  table->add_option("--k-range", ta.k_range, "A..B");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a theorem over a parameter range");
  verify->add_option("--claim", va.claim)
      ->required()
      ->check(CLI::IsMember({"thm_3k_even", "thm_bounds", "cor_isomorphism", "thm_four_equal",
                             "thm_even_cycle_zero", "qbf_equivalence"}));
  verify->add_option("--m-min", va.m_min);
  verify->add_option("--m-max", va.m_max);
  verify->add_option("--k", va.ks, "k values (thm_3k_even)")->delimiter(',');
  verify->add_option("--samples", va.samples);
  verify->add_option("--seed", va.seed);
  verify->add_option("--max-vars", va.max_vars);
  verify->add_option("--max-clauses", va.max_clauses);

  std::string cnf, out_path;
  auto* reduce = app.add_subcommand("reduce", "Compile a 3-CNF QBF into a Toggle graph");
  reduce->add_option("--cnf", cnf)->required();
  reduce->add_option("--out", out_path)->required();

  std::string check_cnf;
  auto* qbf = app.add_subcommand("qbf-check", "Compare QBF truth with the Toggle winner of its reduction");
  qbf->add_option("--cnf", check_cnf)->required();

  OeisArgs oa;
  auto* oeis = app.add_subcommand("oeis-check", "Cross-check computed values with an OEIS b-file");
  oeis->add_option("--seq", oa.seq)->required()->check(CLI::IsMember({"A071426", "A361517"}));
  oeis->add_option("--bfile", oa.bfile);
  oeis->add_option("--count", oa.count);
  oeis->add_flag("--fetch", oa.fetch, "download the b-file instead of using the snapshot");
  oeis->add_option("--oeis-base-url", oa.base_url);

  std::string replay_graph, moves;
  auto* rp = app.add_subcommand("replay", "Replay a move sequence");
  rp->add_option("--graph", replay_graph)->required();
  rp->add_option("--moves", moves)->required();

  std::size_t jl_m = 0;
  auto* jl = app.add_subcommand("jl", "Nimber of Jacob's Ladder on m rungs");
  jl->add_option("--m", jl_m)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return BadInput;
  }

  try {
    g.memo_limit = memo_limit_from_env();
    if (*nimber) return cmd_nimber(na, g, out);
    if (*table) return cmd_table(ta, g, out);
    if (*verify) return cmd_verify(va, g, out);
    if (*reduce) return cmd_reduce(cnf, out_path, g, out);
    if (*qbf) return cmd_qbf_check(check_cnf, g, out);
    if (*oeis) return cmd_oeis(oa, g, out);
    if (*rp) return cmd_replay(replay_graph, moves, g, out);
    if (*jl) return cmd_jl(jl_m, g, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return BadInput;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return OverBudget;
  } catch (const RuleViolation& e) {
    err << "rule violation: " << e.what() << '\n';
    return Failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return Failure;
  }
  return BadInput;
}

}  // namespace toggle::cli
