// orderlink: generate instances, solve ordered-cycle and linkage requests,
// verify certificates, query the exact oracle and run benchmark sweeps.
//
// Exit codes: 0 success, 1 sound failure (no certificate), 2 usage or input error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#if __has_include("json.hpp")
#include "json.hpp"
#else
#include <nlohmann/json.hpp>
#endif
#include "orderlink/generators.hpp"
#include "orderlink/io.hpp"
#include "orderlink/oracle.hpp"
#include "orderlink/solver.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace orderlink;

constexpr int kExitOk = 0;
constexpr int kExitUnsolved = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- argument parsing helpers ---------------------------------------------

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) parts.push_back(cur);
  return parts;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + s + "' is not a non-negative integer");
  }
  if (used != s.size() || s.front() == '-') throw UsageError(what + ": '" + s + "' is not a non-negative integer");
  return v;
}

std::vector<VertexId> parse_specials(const std::string& text) {
  std::vector<VertexId> out;
  for (const auto& p : split(text, ',')) out.push_back(static_cast<VertexId>(parse_uint(p, "--specials")));
  if (out.empty()) throw UsageError("--specials: expected a comma-separated vertex list");
  return out;
}

std::vector<TerminalPair> parse_pairs(const std::string& text) {
  std::vector<TerminalPair> out;
  for (const auto& p : split(text, ',')) {
    const auto ends = split(p, ':');
    if (ends.size() != 2) throw UsageError("--pairs: expected source:target, got '" + p + "'");
    out.push_back({static_cast<VertexId>(parse_uint(ends[0], "--pairs")),
                   static_cast<VertexId>(parse_uint(ends[1], "--pairs"))});
  }
  if (out.empty()) throw UsageError("--pairs: expected at least one source:target pair");
  return out;
}

/// "lo", "lo:hi" or "lo:hi:step"; lo > hi yields an empty range.
std::vector<std::uint64_t> parse_range(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.empty() || parts.size() > 3) throw UsageError(what + ": expected lo[:hi[:step]]");
  const auto lo = parse_uint(parts[0], what);
  const auto hi = parts.size() > 1 ? parse_uint(parts[1], what) : lo;
  const auto step = parts.size() > 2 ? parse_uint(parts[2], what) : 1;
  if (step == 0) throw UsageError(what + ": step must be positive");
  std::vector<std::uint64_t> out;
  for (auto v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

// ---- io helpers -------------------------------------------------------------

Digraph load_digraph(const std::string& path) {
  if (path == "-") return read_arc_list(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_arc_list(in);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

json path_json(const Path& p) { return json(p.vertices); }

json paths_json(std::span<const Path> paths) {
  json arr = json::array();
  for (const Path& p : paths) arr.push_back(path_json(p));
  return arr;
}

std::vector<Path> paths_from_json(const json& arr, const char* field) {
  if (!arr.is_array()) throw UsageError(std::string("certificate field '") + field + "' must be an array");
  std::vector<Path> out;
  for (const auto& p : arr) out.push_back(Path{p.get<std::vector<VertexId>>()});
  return out;
}

json failure_json(const std::optional<Failure>& f) {
  if (!f) return nullptr;
  return {{"stage", f->stage}, {"reason", f->reason}};
}

json digraph_json(const Digraph& d) {
  json arcs = json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
  return {{"schema", 1}, {"n", d.order()}, {"arcs", arcs}};
}

std::string render(const Digraph& d, const std::string& format) {
  if (format == "arclist") return to_arc_list(d);
  if (format == "dot") return to_dot(d);
  return digraph_json(d).dump(2) + "\n";
}

json witness_json(const ExtremalWitness& w) {
  json roles = json::array();
  for (std::size_t v = 0; v < w.roles.size(); ++v) {
    json r = {{"vertex", v}, {"part", part_name(w.roles[v].part)}};
    if (!w.roles[v].name.empty()) r["name"] = w.roles[v].name;
    roles.push_back(r);
  }
  json j = {{"schema", 1},
            {"construction", w.construction},
            {"case", w.case_label},
            {"n", w.digraph.order()},
            {"min_semi_degree", min_semi_degree(w.digraph)},
            {"special_sequence", w.special_sequence}};
  if (!w.pairs.empty()) {
    json pairs = json::array();
    for (const auto& p : w.pairs) pairs.push_back({p.source, p.target});
    j["pairs"] = pairs;
  }
  j["roles"] = roles;
  return j;
}

// ---- commands -------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t n = 0, k = 0, ell = 0, delta = 0;
  std::uint64_t seed = 1;
  std::string format = "arclist";
  std::string out, witness;
};

int cmd_gen(const GenArgs& a) {
  std::optional<ExtremalWitness> w;
  Digraph d;
  if (a.kind == "complete") {
    d = complete_digraph(a.n);
  } else if (a.kind == "random") {
    d = random_min_degree(a.n, a.delta, a.seed);
  } else if (a.kind == "extremal-linked") {
    w = extremal_linked(a.ell, a.n);
  } else {
    w = extremal_ordered(a.k, a.n);
  }
  if (w) d = w->digraph;
  emit(render(d, a.format), a.out);
  std::string witness_path = a.witness;
  if (witness_path.empty() && w && !a.out.empty() && a.out != "-") witness_path = a.out + ".json";
  if (!witness_path.empty()) {
    if (!w) throw UsageError("--witness: only extremal constructions carry a witness");
    emit(witness_json(*w).dump(2) + "\n", witness_path);
  }
  return kExitOk;
}

struct SolveArgs {
  std::string in, specials, pairs, out;
  std::optional<std::size_t> threshold;
  bool no_check = false;
  bool trace = false;
};

SolverOptions solver_options(const SolveArgs& a) {
  SolverOptions o;
  o.type_threshold = a.threshold;
  o.check_bounds = !a.no_check;
  o.record_trace = a.trace;
  return o;
}

json solve_json(const SolveOutcome& r, const SpecialSequence& s, bool with_trace) {
  json j = {{"schema", 1},
            {"command", "solve"},
            {"status", r.ok() ? "success" : "not-guaranteed"},
            {"k", s.size()},
            {"specials", std::vector<VertexId>(s.vertices().begin(), s.vertices().end())}};
  if (r.ok()) {
    j["segments"] = paths_json(r.segments);
    j["cycle"] = r.cycle;
    j["verified"] = true;
  }
  j["failure"] = failure_json(r.failure);
  j["augmentations"] = r.augmentations;
  j["hard_indices"] = r.initial_hard;
  if (with_trace) {
    json steps = json::array();
    for (const auto& st : r.trace)
      steps.push_back({{"rule", rule_name(st.rule)},
                       {"missing", st.missing},
                       {"changed", st.changed},
                       {"before", {st.j_before, st.t_before}},
                       {"after", {st.j_after, st.t_after}},
                       {"reclassified", st.reclassified ? json(*st.reclassified) : json(nullptr)}});
    j["trace"] = steps;
  }
  return j;
}

int cmd_solve(const SolveArgs& a) {
  const Digraph d = load_digraph(a.in);
  const SpecialSequence s(parse_specials(a.specials));
  s.validate_against(d);
  const SolveOutcome r = solve_ordered(d, s, solver_options(a));
  if (r.ok() && !verify_ordered_cycle(d, s, r.segments)) throw std::logic_error("solver output failed verification");
  emit(solve_json(r, s, a.trace).dump(2) + "\n", a.out);
  return r.ok() ? kExitOk : kExitUnsolved;
}

int cmd_link(const SolveArgs& a) {
  const Digraph d = load_digraph(a.in);
  const LinkRequest req(parse_pairs(a.pairs));
  req.validate_against(d);
  const LinkOutcome r = solve_linkage(d, req, solver_options(a));
  if (r.ok() && !verify_linkage(d, req, r.paths)) throw std::logic_error("linkage output failed verification");
  json pairs = json::array();
  for (const auto& p : req.pairs()) pairs.push_back({p.source, p.target});
  json j = {{"schema", 1}, {"command", "link"}, {"status", r.ok() ? "success" : "not-guaranteed"}, {"pairs", pairs}};
  if (r.ok()) {
    j["paths"] = paths_json(r.paths);
    j["verified"] = true;
  }
  j["failure"] = failure_json(r.failure);
  j["augmentations"] = r.ordered.augmentations;
  emit(j.dump(2) + "\n", a.out);
  return r.ok() ? kExitOk : kExitUnsolved;
}

struct VerifyArgs {
  std::string in, cert, out;
};

int cmd_verify(const VerifyArgs& a) {
  const Digraph d = load_digraph(a.in);
  const json c = load_json(a.cert);
  Verdict v;
  std::string kind;
  try {
    if (c.contains("pairs")) {
      kind = "linkage";
      std::vector<TerminalPair> pairs;
      for (const auto& p : c.at("pairs")) pairs.push_back({p.at(0).get<VertexId>(), p.at(1).get<VertexId>()});
      v = verify_linkage(d, LinkRequest(pairs), paths_from_json(c.at("paths"), "paths"));
    } else {
      kind = "ordered-cycle";
      const SpecialSequence s(c.at("specials").get<std::vector<VertexId>>());
      v = verify_ordered_cycle(d, s, paths_from_json(c.at("segments"), "segments"));
    }
  } catch (const json::exception& e) {
    throw UsageError(a.cert + ": " + e.what());
  }
  json j = {{"schema", 1}, {"command", "verify"}, {"kind", kind}, {"valid", v.ok}};
  if (!v.ok) j["reason"] = v.reason;
  emit(j.dump(2) + "\n", a.out);
  return v.ok ? kExitOk : kExitUnsolved;
}

struct OracleArgs {
  std::string in, specials, pairs, packing, out;
  std::size_t cap = 24;
  std::size_t maxlen = kMaxSegmentLength;
};

int cmd_oracle(const OracleArgs& a) {
  const int modes = !a.specials.empty() + !a.pairs.empty() + !a.packing.empty();
  if (modes != 1) throw UsageError("oracle: give exactly one of --specials, --pairs, --packing");
  const Digraph d = load_digraph(a.in);
  const OracleLimits limits{a.cap};
  json j = {{"schema", 1}, {"command", "oracle"}};
  bool positive = false;
  if (!a.packing.empty()) {
    const auto p = parse_pairs(a.packing);
    if (p.size() != 1) throw UsageError("--packing: expected a single u:v pair");
    const auto count = max_disjoint_short_paths(d, p[0].source, p[0].target, a.maxlen, limits);
    j["query"] = "max-disjoint-short-paths";
    j["maxlen"] = a.maxlen;
    j["count"] = count;
    positive = true;
  } else if (!a.specials.empty()) {
    const SpecialSequence s(parse_specials(a.specials));
    const auto cert = find_ordered_cycle(d, s, limits);
    j["query"] = "ordered-cycle";
    j["specials"] = std::vector<VertexId>(s.vertices().begin(), s.vertices().end());
    j["exists"] = cert.has_value();
    if (cert) j["segments"] = paths_json(cert->segments);
    positive = cert.has_value();
  } else {
    const LinkRequest req(parse_pairs(a.pairs));
    const auto cert = find_linkage(d, req, limits);
    json pairs = json::array();
    for (const auto& p : req.pairs()) pairs.push_back({p.source, p.target});
    j["query"] = "linkage";
    j["pairs"] = pairs;
    j["exists"] = cert.has_value();
    if (cert) j["paths"] = paths_json(cert->segments);
    positive = cert.has_value();
  }
  emit(j.dump(2) + "\n", a.out);
  return positive ? kExitOk : kExitUnsolved;
}

struct BenchArgs {
  std::string n = "60:600:60", seed = "1:5", specials, out;
  std::size_t k = 3;
  std::optional<std::size_t> delta;
  std::size_t threads = 0;
};

struct BenchRow {
  std::size_t n = 0, k = 0, delta = 0;
  std::uint64_t seed = 0;
  std::string outcome;
  std::size_t augmentations = 0;
  double ms = 0;
};

std::vector<VertexId> bench_specials(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  std::vector<VertexId> picked;
  std::mt19937_64 rng(seed ^ 0x5eed5eed5eed5eedULL);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), static_cast<std::ptrdiff_t>(k), rng);
  std::shuffle(picked.begin(), picked.end(), rng);
  return picked;
}

int cmd_bench(const BenchArgs& a) {
  if (a.k == 0) throw UsageError("--k must be positive");
  const auto ns = parse_range(a.n, "--n");
  const auto seeds = parse_range(a.seed, "--seed");
  const auto fixed = a.specials.empty() ? std::vector<VertexId>{} : parse_specials(a.specials);
  if (!fixed.empty() && fixed.size() != a.k) throw UsageError("--specials must list exactly k vertices");

  std::vector<BenchRow> rows;
  for (auto n : ns)
    for (auto seed : seeds) {
      BenchRow r;
      r.n = n;
      r.k = a.k;
      r.seed = seed;
      r.delta = a.delta.value_or(required_min_degree(n, a.k));
      if (n < a.k || r.delta >= n) throw UsageError("bench: n=" + std::to_string(n) + " too small for k and delta");
      rows.push_back(r);
    }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        BenchRow& r = rows[i];
        const Digraph d = random_min_degree(r.n, r.delta, r.seed);
        const SpecialSequence s(fixed.empty() ? bench_specials(r.n, r.k, r.seed) : fixed);
        SolverOptions opts;
        opts.record_trace = false;
        const auto t0 = std::chrono::steady_clock::now();
        const SolveOutcome out = solve_ordered(d, s, opts);
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        r.outcome = out.ok() ? "success" : "not-guaranteed";
        r.augmentations = out.augmentations;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
  const std::size_t count = std::min(a.threads ? a.threads : hw, std::max<std::size_t>(rows.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::ostringstream csv;
  csv << "n,k,delta,seed,outcome,augmentations,ms\n";
  for (const auto& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.ms);
    csv << r.n << ',' << r.k << ',' << r.delta << ',' << r.seed << ',' << r.outcome << ',' << r.augmentations << ','
        << ms << '\n';
  }
  emit(csv.str(), a.out);
  return kExitOk;
}

void add_solver_flags(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("--in", a.in, "Arc-list instance file ('-' for stdin)")->required();
  cmd->add_option("--out", a.out, "Result JSON path (default stdout)");
  cmd->add_option("--threshold", a.threshold, "Override the type threshold k0 (default 30k^2)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-check", a.no_check, "Skip the counting-bound checks of the correctness argument");
  cmd->add_flag("--trace", a.trace, "Include the augmentation trace in the result");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered cycles and linkages in dense digraphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("kind", gen.kind, "complete | random | extremal-linked | extremal-ordered")
      ->required()
      ->check(CLI::IsMember({"complete", "random", "extremal-linked", "extremal-ordered"}));
  g->add_option("--n", gen.n, "Vertex count")->required();
  g->add_option("--k", gen.k, "Number of special vertices (extremal-ordered)");
  g->add_option("--ell", gen.ell, "Number of pairs (extremal-linked)");
  g->add_option("--delta", gen.delta, "Minimum semi-degree (random)");
  g->add_option("--seed", gen.seed, "Random seed (random)");
  g->add_option("--format", gen.format, "arclist | dot | json")->check(CLI::IsMember({"arclist", "dot", "json"}));
  g->add_option("--out", gen.out, "Instance path (default stdout)");
  g->add_option("--witness", gen.witness, "Witness JSON path (default <out>.json for extremal kinds)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Find a cycle meeting the specials in order");
  add_solver_flags(s, solve);
  s->add_option("--specials", solve.specials, "Comma-separated special vertices s1,...,sk")->required();

  SolveArgs link;
  auto* l = app.add_subcommand("link", "Find disjoint paths joining the given pairs");
  add_solver_flags(l, link);
  l->add_option("--pairs", link.pairs, "Comma-separated source:target pairs")->required();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a certificate (a solve/link/oracle result)");
  v->add_option("--in", verify.in, "Arc-list instance file")->required();
  v->add_option("--cert", verify.cert, "Certificate JSON")->required();
  v->add_option("--out", verify.out, "Result JSON path (default stdout)");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exact exhaustive answers on small instances");
  o->add_option("--in", oracle.in, "Arc-list instance file")->required();
  o->add_option("--specials", oracle.specials, "Decide an ordered cycle through these vertices");
  o->add_option("--pairs", oracle.pairs, "Decide a linkage for these pairs");
  o->add_option("--packing", oracle.packing, "u:v; count disjoint short u->v paths");
  o->add_option("--maxlen", oracle.maxlen, "Length bound for --packing");
  o->add_option("--cap", oracle.cap, "Largest order searched exhaustively (at most 64)");
  o->add_option("--out", oracle.out, "Result JSON path (default stdout)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Solve random instances over a parameter sweep (CSV)");
  b->add_option("--n", bench.n, "Orders as lo[:hi[:step]]");
  b->add_option("--k", bench.k, "Number of special vertices");
  b->add_option("--delta", bench.delta, "Minimum semi-degree (default the guarantee's bound)");
  b->add_option("--seed", bench.seed, "Seeds as lo[:hi[:step]]");
  b->add_option("--specials", bench.specials, "Use these specials for every instance");
  b->add_option("--threads", bench.threads, "Worker threads (default hardware concurrency)");
  b->add_option("--out", bench.out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*g) {
      if (gen.kind == "random" && !g->count("--delta")) throw UsageError("gen random: --delta is required");
      if (gen.kind == "extremal-linked" && !gen.ell) throw UsageError("gen extremal-linked: --ell is required");
      if (gen.kind == "extremal-ordered" && !gen.k) throw UsageError("gen extremal-ordered: --k is required");
      return cmd_gen(gen);
    }
    if (*s) return cmd_solve(solve);
    if (*l) return cmd_link(link);
    if (*v) return cmd_verify(verify);
    if (*o) return cmd_oracle(oracle);
    if (*b) return cmd_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleRefused& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
