#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <variant>

#include "CLI11.hpp"
#include "bpd/detect.hpp"
#include "bpd/errors.hpp"
#include "bpd/format.hpp"
#include "bpd/generate.hpp"
#include "bpd/kernel.hpp"
#include "bpd/solve.hpp"

#ifndef BPD_VERSION
#define BPD_VERSION "0.0.0"
#endif

namespace bpd::cli {

namespace {

using json = nlohmann::json;

constexpr double kBranchBase = 1.8393;

struct Options {
  std::string input;
  std::string solution;
  std::string cnf;
  std::string output;
  std::string layout;
  std::string corpus;
  std::string family = "random";
  std::string kind;
  std::string method = "auto";
  std::optional<std::int64_t> k;
  std::optional<std::uint64_t> seed;
  bool optimize = false;
  bool parallel = false;
  bool json_flag = false;
  bool no_block_bound = false;
  bool bridge_rule = false;
  bool no_trivial_yes = false;
  unsigned threads = 0;
  int length = 0;
  int count = 10;
  Vertex n = 10;
  double p = 0.3;
  double blue = 0.5;
};

json pair_json(VertexPair e) { return json::array({e.u, e.v}); }

json edges_json(const DeletionSet& s) {
  json out = json::array();
  for (VertexPair e : s) out.push_back(pair_json(e));
  return out;
}

json stats_json(const SearchStats& s) {
  return {{"nodes_expanded", s.nodes_expanded},
          {"max_depth", s.max_depth},
          {"rule_counts", {{"br1", s.br1}, {"br2", s.br2}, {"br3", s.br3}, {"nice_leaves", s.nice_leaves}}},
          {"time_ms", s.time_ms}};
}

json solve_json(const SolveResult& r) {
  json out = {{"answer", r.yes ? "yes" : "no"},
              {"k", r.k},
              {"method", std::string(method_name(r.method))},
              {"stats", stats_json(r.stats)},
              {"deleted_edges", r.solution ? edges_json(*r.solution) : json::array()}};
  if (r.optimum) out["optimum"] = *r.optimum;
  return out;
}

json structure_json(const ForbiddenStructure& s) {
  json out = {{"kind", std::string(kind_name(s.kind))},
              {"witness", s.witness},
              {"blue_role", std::string(color_name(s.blue_role))}};
  if (!s.edges.empty()) out["edges"] = edges_json(s.edges);
  return out;
}

json step_json(const KernelStep& step) {
  json out = std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RemovedFreeComponent>) {
          return {{"vertices", s.vertices}};
        } else if constexpr (std::is_same_v<T, SolvedSmallComponent>) {
          return {{"vertices", s.vertices}, {"deletions", edges_json(s.deletions)}, {"cost", s.cost}};
        } else if constexpr (std::is_same_v<T, BridgeRule>) {
          return {{"bridge", pair_json(s.bridge)}, {"removed", s.removed}};
        } else if constexpr (std::is_same_v<T, ForcedEdgeDeletion>) {
          return {{"edge", pair_json(s.edge)}};
        } else if constexpr (std::is_same_v<T, RemovedVertex>) {
          return {{"vertex", s.vertex}};
        } else if constexpr (std::is_same_v<T, TrivialYes>) {
          return {{"color", std::string(color_name(s.color))}, {"deletions", edges_json(s.deletions)}};
        } else {
          return {{"new_to_old", s.new_to_old}, {"old_n", s.old_n}};
        }
      },
      step);
  out["rule"] = std::string(step_name(step));
  return out;
}

json layout_json(const ReductionLayout& l) {
  json vars = json::array();
  for (std::size_t i = 0; i < l.variables.size(); ++i) {
    const auto& v = l.variables[i];
    vars.push_back({{"variable", i + 1}, {"v", v.center}, {"T", v.t}, {"F", v.f}});
  }
  json clauses = json::array();
  for (std::size_t j = 0; j < l.clauses.size(); ++j) {
    const auto& c = l.clauses[j];
    json slots = json::array();
    for (int p = 0; p < 3; ++p)
      slots.push_back({{"a", c.a[p]},
                       {"variable", c.variable[p] + 1},
                       {"positive", c.positive[p]},
                       {"psi", c.occurrence[p]},
                       {"identified_with", std::string(c.positive[p] ? "t" : "f") + "_" +
                                               std::to_string(c.variable[p] + 1) + "^" +
                                               std::to_string(c.occurrence[p])}});
    clauses.push_back({{"clause", j + 1}, {"A", c.a}, {"B", c.b}, {"W", c.w}, {"slots", slots}});
  }
  return {{"variables", vars}, {"clauses", clauses}};
}

json new_report(const std::string& command, std::string_view canonical_input, const Options& o) {
  json r;
  r["command"] = command;
  r["version"] = BPD_VERSION;
  r["input_digest"] = fnv1a_hex(canonical_input);
  r["seed"] = o.seed ? json(*o.seed) : json(nullptr);
  return r;
}

void emit(std::ostream& out, json report) {
  seal(report);
  out << report.dump(2) << "\n";
}

SolveOptions solve_options(const Options& o) {
  SolveOptions s;
  s.block_bound = !o.no_block_bound;
  s.parallel = o.parallel;
  s.threads = o.threads;
  return s;
}

Method requested_method(const std::string& name) {
  const auto m = method_from_name(name);
  if (!m || *m == Method::KernelOnly || *m == Method::TrivialYes)
    throw PreconditionError("unknown method '" + name + "'");
  return *m;
}

int cmd_solve(const Options& o, std::ostream& out) {
  if (o.optimize == o.k.has_value()) throw PreconditionError("solve needs exactly one of --k and --optimize");
  const ColoredGraph g = read_bpd_file(o.input);
  const Method m = requested_method(o.method);
  const SolveResult r = o.optimize ? optimize(m, g, solve_options(o)) : solve_with(m, {g, *o.k}, solve_options(o));
  json report = new_report("solve", write_bpd(g), o);
  report["payload"] = solve_json(r);
  emit(out, report);
  return r.yes ? kExitYes : kExitNo;
}

int cmd_kernelize(const Options& o, std::ostream& out) {
  if (!o.k) throw PreconditionError("kernelize needs --k");
  const ColoredGraph g = read_bpd_file(o.input);
  KernelOptions ko;
  ko.bridge_rule = o.bridge_rule;
  ko.trivial_yes = !o.no_trivial_yes;
  const KernelResult kr = kernelize({g, *o.k}, ko);
  const std::string text = write_bpd(kr.kernel.graph);
  if (!o.output.empty()) write_text_file(o.output, text);
  json trace = json::array();
  for (const KernelStep& s : kr.trace.steps) trace.push_back(step_json(s));
  json report = new_report("kernelize", write_bpd(g), o);
  report["payload"] = {
      {"k", *o.k},
      {"k_prime", kr.kernel.k},
      {"n_prime", kr.kernel.graph.num_vertices()},
      {"m_prime", kr.kernel.graph.num_edges()},
      {"no_instance", kr.no_instance},
      {"trivially_solved", kr.trivially_solved},
      {"trace", trace},
      {"trace_cost", kr.trace.cost()},
      {"bound", {{"vertex_bound", kr.vertex_bound}, {"within_bound", kr.within_bound}}},
      {"kernel_bpd", text},
  };
  emit(out, report);
  return kExitYes;
}

int cmd_detect(const Options& o, std::ostream& out) {
  const ColoredGraph g = read_bpd_file(o.input);
  json counts = json::object(), first = json::object();
  for (StructureKind kind : kAllKinds) {
    const auto all = find_all(g, kind);
    counts[std::string(kind_name(kind))] = all.size();
    first[std::string(kind_name(kind))] = all.empty() ? json(nullptr) : structure_json(all.front());
  }
  const ClassFlags f = classify(g);
  json report = new_report("detect", write_bpd(g), o);
  report["payload"] = {{"counts", counts},
                       {"first", first},
                       {"nice", is_nice(g)},
                       {"classes",
                        {{"bicolored_p3_free", f.bicolored_p3_free},
                         {"endangered_k3_free", f.endangered_k3_free},
                         {"mono_free", f.mono_free},
                         {"max_degree_le2", f.max_degree_le2}}}};
  emit(out, report);
  return kExitYes;
}

json graph_summary(const ColoredGraph& g, const Options& o, const std::string& header = "") {
  const std::string text = header + write_bpd(g);
  if (!o.output.empty()) write_text_file(o.output, text);
  json out = {{"n", g.num_vertices()},
              {"m", g.num_edges()},
              {"m_red", g.num_edges(Color::Red)},
              {"m_blue", g.num_edges(Color::Blue)},
              {"max_degree", g.max_degree()}};
  if (o.output.empty()) out["bpd"] = text;
  return out;
}

int cmd_generate_sat(const Options& o, std::ostream& out) {
  const CnfFormula f = parse_dimacs(read_text_file(o.cnf));
  const Reduction r = reduce_sat_to_bpd(f);
  json payload = graph_summary(r.instance.graph, o, "# k " + std::to_string(r.instance.k) + "\n");
  payload["k"] = r.instance.k;
  payload["variables"] = f.num_vars;
  payload["clauses"] = f.clauses.size();
  const json layout = layout_json(r.layout);
  if (!o.layout.empty()) write_text_file(o.layout, layout.dump(2) + "\n");
  else payload["layout"] = layout;
  json report = new_report("generate sat", write_dimacs(f), o);
  report["payload"] = payload;
  emit(out, report);
  return kExitYes;
}

int cmd_generate_gadget(const Options& o, std::ostream& out) {
  const auto kind = gadget_from_name(o.kind);
  if (!kind) throw PreconditionError("unknown gadget '" + o.kind + "'");
  const ColoredGraph g = gadget(*kind, o.length);
  json report = new_report("generate gadget", "gadget " + o.kind + " " + std::to_string(o.length), o);
  report["payload"] = graph_summary(g, o);
  report["payload"]["kind"] = o.kind;
  emit(out, report);
  return kExitYes;
}

int cmd_generate_random(const Options& o, std::ostream& out) {
  if (!o.seed) throw PreconditionError("generate random needs --seed");
  const ColoredGraph g = random_instance(o.n, o.p, o.blue, *o.seed);
  json report = new_report("generate random",
                           "random " + std::to_string(o.n) + " " + json(o.p).dump() + " " + json(o.blue).dump(), o);
  report["payload"] = graph_summary(g, o);
  emit(out, report);
  return kExitYes;
}

DeletionSet parse_solution(const json& j, std::optional<std::int64_t>& k) {
  const json* list = &j;
  if (j.is_object()) {
    const json* body = j.contains("payload") ? &j.at("payload") : &j;
    if (!body->is_object() || !body->contains("deleted_edges")) throw ParseError("solution has no deleted_edges");
    list = &body->at("deleted_edges");
    if (!k && body->contains("k")) k = body->at("k").get<std::int64_t>();
  }
  if (!list->is_array()) throw ParseError("deleted_edges must be an array");
  DeletionSet s;
  for (const json& e : *list) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("each deleted edge must be a pair of integers");
    const auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0 || u > INT32_MAX || v > INT32_MAX || u == v) throw ParseError("bad vertex pair in solution");
    s.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return s;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ColoredGraph g = read_bpd_file(o.input);
  json j;
  try {
    j = json::parse(read_text_file(o.solution));
  } catch (const json::exception& e) {
    throw ParseError(std::string("solution is not JSON: ") + e.what());
  }
  std::optional<std::int64_t> k = o.k;
  DeletionSet s;
  try {
    s = parse_solution(j, k);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed solution: ") + e.what());
  }
  if (!k) throw PreconditionError("no budget: pass --k or include k in the solution");
  std::sort(s.begin(), s.end());
  const Verdict v = verify_solution(g, s, *k);
  json report = new_report("verify", write_bpd(g), o);
  report["payload"] = {{"ok", v.ok}, {"reason", v.reason}, {"k", *k}, {"size", s.size()}};
  emit(out, report);
  return v.ok ? kExitYes : kExitNo;
}

struct BenchItem {
  std::string name;
  ColoredGraph graph;
};

std::vector<BenchItem> bench_corpus(const Options& o) {
  std::vector<BenchItem> items;
  if (!o.corpus.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(o.corpus))
      if (entry.is_regular_file() && entry.path().extension() == ".bpd") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) items.push_back({f.filename().string(), read_bpd_file(f.string())});
  } else if (o.family == "random") {
    const std::uint64_t base = o.seed.value_or(1);
    for (int i = 0; i < o.count; ++i)
      items.push_back({"random-" + std::to_string(i), random_instance(o.n, o.p, o.blue, base + i)});
  } else if (o.family == "disjoint") {
    for (int i = 1; i <= o.count; ++i) {
      std::vector<Edge> edges;
      for (Vertex c = 0; c < i; ++c) {
        edges.emplace_back(3 * c, 3 * c + 1, Color::Blue);
        edges.emplace_back(3 * c + 1, 3 * c + 2, Color::Red);
      }
      items.push_back({"disjoint-" + std::to_string(i), ColoredGraph(3 * i, edges)});
    }
  } else if (o.family == "clause") {
    items.push_back({"clause", gadget(GadgetKind::Clause)});
    items.push_back({"variable", gadget(GadgetKind::Variable)});
  } else if (o.family == "cycles") {
    for (int i = 0; i < o.count; ++i) {
      const int len = 4 + 2 * i;
      items.push_back({"cycle-" + std::to_string(len), gadget(GadgetKind::AlternatingCycle, len)});
    }
  } else {
    throw PreconditionError("unknown bench family '" + o.family + "'");
  }
  if (items.empty()) throw PreconditionError("empty bench corpus");
  return items;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const std::vector<BenchItem> items = bench_corpus(o);
  const SolveOptions so = solve_options(o);
  json rows = json::array();
  std::string digest_input;
  std::uint64_t total_nodes = 0;
  double max_ratio = 0, sum_ratio = 0;
  for (const BenchItem& it : items) {
    digest_input += it.name + "\n" + write_bpd(it.graph);
    const std::int64_t k = *optimize(Method::Auto, it.graph).optimum;
    const SolveResult yes = solve_branching({it.graph, k}, so);
    json row = {{"name", it.name},
                {"n", it.graph.num_vertices()},
                {"m", it.graph.num_edges()},
                {"k", k},
                {"nodes", yes.stats.nodes_expanded},
                {"time_ms", yes.stats.time_ms}};
    std::uint64_t nodes = yes.stats.nodes_expanded;
    if (k > 0) {
      const SolveResult no = solve_branching({it.graph, k - 1}, so);
      row["nodes_below"] = no.stats.nodes_expanded;
      nodes = std::max(nodes, no.stats.nodes_expanded);
    }
    const double bound = std::pow(kBranchBase, static_cast<double>(k));
    row["base_pow_k"] = bound;
    row["ratio"] = static_cast<double>(nodes) / bound;
    max_ratio = std::max(max_ratio, static_cast<double>(nodes) / bound);
    sum_ratio += static_cast<double>(nodes) / bound;
    total_nodes += yes.stats.nodes_expanded;
    rows.push_back(row);
  }
  json report = new_report("bench", digest_input, o);
  report["payload"] = {{"instances", rows},
                       {"aggregate",
                        {{"count", items.size()},
                         {"total_nodes", total_nodes},
                         {"max_ratio", max_ratio},
                         {"mean_ratio", sum_ratio / static_cast<double>(items.size())}}},
                       {"base", kBranchBase},
                       {"block_bound", so.block_bound}};
  emit(out, report);
  return kExitYes;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
  return out;
}

nlohmann::json without_timing(const nlohmann::json& report) {
  if (report.is_object()) {
    json out = json::object();
    for (auto it = report.begin(); it != report.end(); ++it)
      if (it.key() != "time_ms") out[it.key()] = without_timing(it.value());
    return out;
  }
  if (report.is_array()) {
    json out = json::array();
    for (const json& x : report) out.push_back(without_timing(x));
    return out;
  }
  return report;
}

void seal(nlohmann::json& report) {
  json body = without_timing(report);
  body.erase("report_digest");
  report["report_digest"] = fnv1a_hex(body.dump());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact solver for Bicolored P3 Deletion", "bpd"};
  app.require_subcommand(1);
  app.set_version_flag("--version", BPD_VERSION);

  auto input = [&](CLI::App* c) { c->add_option("--input,-i", o.input, "graph in bpd v1 format")->required(); };
  auto search = [&](CLI::App* c) {
    c->add_flag("--parallel", o.parallel, "run sibling subtrees concurrently");
    c->add_option("--threads", o.threads, "worker cap (default: BPD_THREADS or cores)");
    c->add_flag("--no-block-bound", o.no_block_bound, "prune with the P3 packing bound only");
  };

  CLI::App* solve = app.add_subcommand("solve", "decide or optimize an instance");
  input(solve);
  auto* k_opt = solve->add_option("--k", o.k, "deletion budget");
  auto* opt_flag = solve->add_flag("--optimize", o.optimize, "report a minimum solution");
  k_opt->excludes(opt_flag);
  solve->add_option("--method", o.method, "auto|branch|vc|deg2|monofree|oracle|nice");
  solve->add_flag("--json", o.json_flag, "JSON output (always on)");
  search(solve);

  CLI::App* kern = app.add_subcommand("kernelize", "apply the reduction rules");
  input(kern);
  kern->add_option("--k", o.k, "deletion budget")->required();
  kern->add_option("-o,--output", o.output, "write the kernel graph here");
  kern->add_flag("--bridge-rule", o.bridge_rule, "also apply the bridge rule");
  kern->add_flag("--no-trivial-yes", o.no_trivial_yes, "skip the color-class shortcut");

  CLI::App* detect = app.add_subcommand("detect", "count forbidden structures");
  input(detect);

  CLI::App* gen = app.add_subcommand("generate", "write generated instances");
  gen->require_subcommand(1);
  CLI::App* sat = gen->add_subcommand("sat", "reduce a (3,4)-CNF formula");
  sat->add_option("--cnf", o.cnf, "DIMACS input")->required();
  sat->add_option("-o,--output", o.output, "graph output");
  sat->add_option("--layout", o.layout, "layout JSON output");
  CLI::App* gad = gen->add_subcommand("gadget", "emit a fixture graph");
  gad->add_option("kind", o.kind, "variable|clause|lc|lo|iiz|hourglass|alternating_cycle")->required();
  gad->add_option("--length", o.length, "cycle length for alternating_cycle");
  gad->add_option("-o,--output", o.output, "graph output");
  CLI::App* rnd = gen->add_subcommand("random", "random two-colored graph");
  rnd->add_option("--n", o.n, "vertices")->required();
  rnd->add_option("--p", o.p, "edge probability")->required();
  rnd->add_option("--blue", o.blue, "blue probability per edge");
  rnd->add_option("--seed", o.seed, "RNG seed")->required();
  rnd->add_option("-o,--output", o.output, "graph output");

  CLI::App* ver = app.add_subcommand("verify", "check a deletion set");
  input(ver);
  ver->add_option("--solution", o.solution, "solution JSON")->required();
  ver->add_option("--k", o.k, "budget (default: k stored in the solution)");

  CLI::App* bench = app.add_subcommand("bench", "branching effort versus 1.8393^k");
  bench->add_option("--corpus", o.corpus, "directory of .bpd files");
  bench->add_option("--family", o.family, "random|disjoint|clause|cycles");
  bench->add_option("--count", o.count, "instances to generate");
  bench->add_option("--n", o.n, "vertices (random)");
  bench->add_option("--p", o.p, "edge probability (random)");
  bench->add_option("--blue", o.blue, "blue probability (random)");
  bench->add_option("--seed", o.seed, "first seed (random)");
  search(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitError;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (kern->parsed()) return cmd_kernelize(o, out);
    if (detect->parsed()) return cmd_detect(o, out);
    if (sat->parsed()) return cmd_generate_sat(o, out);
    if (gad->parsed()) return cmd_generate_gadget(o, out);
    if (rnd->parsed()) return cmd_generate_random(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << "error: no command\n";
  return kExitError;
}

}  // namespace bpd::cli
