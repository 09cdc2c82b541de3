// Command-line front end: solve blocker instances, build and verify the
// reduction gadgets, generate test graphs, and run the property suites.
// JSON reports go to stdout, diagnostics to stderr.
// Exit codes: 0 = yes/pass/done, 1 = no/counterexample, 2 = error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "blocker/blockers.hpp"
#include "blocker/generators.hpp"
#include "blocker/graph.hpp"
#include "blocker/invariants.hpp"
#include "blocker/reductions.hpp"
#include "blocker/suites.hpp"

using json = nlohmann::json;
using namespace blocker;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

json edge_set_json(const EdgeSet& es) {
  json arr = json::array();
  for (const auto& [u, v] : es) arr.push_back(json::array({u, v}));
  return arr;
}

json vertex_set_json(const VertexSet& vs) {
  json arr = json::array();
  for (VertexId v : vs) arr.push_back(v);
  return arr;
}

struct SolveArgs {
  std::string graph_file;
  std::string op = "contract";
  std::string pi = "alpha";
  int k = 0;
  int d = 1;
  std::string engine = "auto";
};

int cmd_solve(const SolveArgs& args) {
  Timer timer;
  Graph g = parse_edge_list(read_file(args.graph_file));
  Operation op =
      args.op == "contract" ? Operation::contraction : Operation::deletion;
  ParameterKind pi = args.pi == "alpha" ? ParameterKind::independence
                                        : ParameterKind::clique;

  std::string engine = args.engine;
  if (engine == "auto") {
    bool polynomial_applies = op == Operation::contraction &&
                              pi == ParameterKind::independence &&
                              args.d >= 1 && args.d <= 3 &&
                              connected_components(g).size() == 1 &&
                              is_bipartite(g).has_value();
    engine = polynomial_applies ? "bipartite" : "brute";
  }

  BlockerResult result;
  if (engine == "bipartite") {
    if (op != Operation::contraction || pi != ParameterKind::independence)
      throw std::invalid_argument(
          "engine=bipartite only solves contraction blocking of alpha");
    result = solve_bipartite_contraction_alpha(g, args.k, args.d);
  } else {
    result = solve_bruteforce({g, op, pi, args.k, args.d});
  }

  // every emitted witness is re-verified; a failure here is an internal bug
  std::string verification = "none";
  if (result.yes) {
    WitnessSet witness;
    if (result.edge_witness)
      witness = *result.edge_witness;
    else
      witness = *result.vertex_witness;
    if (!check_critical(g, op, witness, pi, args.d))
      throw std::logic_error("internal error: witness failed re-verification");
    verification = "passed";
  }

  json report;
  report["schema"] = 1;
  report["command"] = "solve";
  report["instance"] = {
      {"file", args.graph_file}, {"n", g.vertex_count()},
      {"m", g.edge_count()},     {"op", args.op},
      {"pi", args.pi},           {"k", args.k},
      {"d", args.d},             {"engine", engine}};
  report["answer"] = result.yes ? "yes" : "no";
  if (result.edge_witness)
    report["witness"] = edge_set_json(*result.edge_witness);
  else if (result.vertex_witness)
    report["witness"] = vertex_set_json(*result.vertex_witness);
  else
    report["witness"] = nullptr;
  report["pi_before"] = result.pi_before;
  report["pi_after"] =
      result.pi_after ? json(*result.pi_after) : json(nullptr);
  report["verification"] = verification;
  report["elapsed_ms"] = timer.ms();
  std::cout << report.dump(2) << '\n';
  return result.yes ? 0 : 1;
}

struct ReduceArgs {
  std::string from;
  std::string to;
  std::string in_file;
  std::string out_file;
  int k = -1;
};

int cmd_reduce(const ReduceArgs& args) {
  Timer timer;
  json report;
  report["schema"] = 1;
  report["command"] = "reduce";
  report["from"] = args.from;
  report["to"] = args.to;
  report["in"] = args.in_file;
  report["out"] = args.out_file;
  std::string roles_file = args.out_file + ".roles.json";
  json roles;
  roles["schema"] = 1;
  roles["kind"] = args.to;
  std::vector<std::string> warnings;

  Graph gadget_graph;
  if (args.to == "apex-omega") {
    if (args.from != "vc")
      throw std::invalid_argument("apex-omega gadgets are built from vc input");
    Graph base = parse_edge_list(read_file(args.in_file));
    ApexGadget gadget = build_apex_gadget(base);
    gadget_graph = gadget.graph;
    roles["w"] = gadget.universal;
    roles["base_n"] = gadget.base_n;
  } else if (args.to == "chordal-contract" || args.to == "chordal-delete") {
    Wp2SatInstance phi;
    if (args.from == "vc") {
      if (args.k < 0)
        throw std::invalid_argument(
            "building a chordal gadget from vc input requires --k");
      phi = vc_to_wp2sat(parse_edge_list(read_file(args.in_file)), args.k);
    } else {
      phi = parse_wp2sat(read_file(args.in_file));
    }
    ChordalGadget gadget = build_chordal_gadget(phi);
    gadget_graph = gadget.graph;
    warnings = gadget.warnings;
    roles["k"] = gadget.k;
    roles["v_x"] = vertex_set_json(gadget.var_apex);
    json cliques = json::array();
    for (const auto& kx : gadget.var_clique)
      cliques.push_back(vertex_set_json(kx));
    roles["K_x"] = cliques;
    roles["v_c"] = vertex_set_json(gadget.clause_vertex);
  } else {
    throw std::invalid_argument("unknown --to: " + args.to);
  }

  write_file(args.out_file, serialize_edge_list(gadget_graph));
  write_file(roles_file, roles.dump(2) + "\n");
  for (const std::string& w : warnings)
    std::cerr << "warning: " << w << '\n';

  report["roles_file"] = roles_file;
  report["gadget"] = {{"n", gadget_graph.vertex_count()},
                      {"m", gadget_graph.edge_count()}};
  report["warnings"] = warnings;
  report["elapsed_ms"] = timer.ms();
  std::cout << report.dump(2) << '\n';
  return 0;
}

struct VerifyArgs {
  std::string suite;
  uint64_t seed = 1;
  int count = 0;
  int max_n = 0;
};

int cmd_verify(const VerifyArgs& args) {
  Timer timer;
  SuiteOptions opts;
  opts.seed = args.seed;
  opts.count = args.count;
  opts.max_n = args.max_n;
  SuiteReport suite = run_suite(args.suite, opts);

  json files = json::array();
  for (size_t i = 0; i < suite.failures.size(); ++i) {
    std::string name =
        args.suite + "-counterexample-" + std::to_string(i) + ".txt";
    write_file(name, suite.failures[i] + "\n");
    std::cerr << "counterexample written to " << name << '\n';
    files.push_back(name);
  }

  json report;
  report["schema"] = 1;
  report["command"] = "verify";
  report["suite"] = args.suite;
  report["seed"] = args.seed;
  report["checked"] = suite.checked;
  report["passed"] = suite.passed();
  report["counterexample_files"] = files;
  report["elapsed_ms"] = timer.ms();
  std::cout << report.dump(2) << '\n';
  return suite.passed() ? 0 : 1;
}

struct GenArgs {
  std::string family;
  int n = 0;
  double p = 0.3;
  uint64_t seed = 1;
};

int cmd_gen(const GenArgs& args) {
  Graph g;
  if (args.family == "cycle")
    g = gen_cycle(args.n);
  else if (args.family == "path")
    g = gen_path(args.n);
  else if (args.family == "star")
    g = gen_star(args.n);
  else if (args.family == "tree")
    g = gen_tree(args.n, args.seed);
  else if (args.family == "bipartite")
    g = gen_connected_bipartite(args.n, args.p, args.seed);
  else if (args.family == "chordal")
    g = gen_chordal(args.n, args.seed);
  else if (args.family == "triangle-free")
    g = gen_triangle_free(args.n, args.p, args.seed);
  else
    throw std::invalid_argument("unknown --family: " + args.family);
  std::cout << serialize_edge_list(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph blocker toolkit: reduce the independence or clique "
               "number with few contractions or deletions"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "decide a blocker instance");
  solve->add_option("--graph", solve_args.graph_file, "edge-list file")
      ->required();
  solve->add_option("--op", solve_args.op, "operation")
      ->check(CLI::IsMember({"contract", "delete"}));
  solve->add_option("--pi", solve_args.pi, "parameter")
      ->check(CLI::IsMember({"alpha", "omega"}));
  solve->add_option("--k", solve_args.k, "operation budget")->required();
  solve->add_option("--d", solve_args.d, "required parameter drop")
      ->required();
  solve->add_option("--engine", solve_args.engine, "solver selection")
      ->check(CLI::IsMember({"auto", "brute", "bipartite"}));

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "build a hardness gadget");
  reduce->add_option("--from", reduce_args.from, "input kind")
      ->required()
      ->check(CLI::IsMember({"vc", "wp2sat"}));
  reduce->add_option("--to", reduce_args.to, "gadget kind")
      ->required()
      ->check(CLI::IsMember(
          {"chordal-contract", "chordal-delete", "apex-omega"}));
  reduce->add_option("--in", reduce_args.in_file, "input file")->required();
  reduce->add_option("--out", reduce_args.out_file, "output edge-list file")
      ->required();
  reduce->add_option("--k", reduce_args.k,
                     "budget (required for vc input to chordal gadgets)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", verify_args.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"koenig", "forest-criticality",
                             "bipartite-oracle", "gadget-thm2", "gadget-thm3",
                             "gadget-thm6", "roundtrips"}));
  verify->add_option("--seed", verify_args.seed, "random seed");
  verify->add_option("--count", verify_args.count, "instance count");
  verify->add_option("--max-n", verify_args.max_n, "largest graph size");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a graph file on stdout");
  gen->add_option("--family", gen_args.family, "graph family")
      ->required()
      ->check(CLI::IsMember({"bipartite", "tree", "chordal", "triangle-free",
                             "cycle", "path", "star"}));
  gen->add_option("--n", gen_args.n, "vertex count")->required();
  gen->add_option("--p", gen_args.p, "edge density");
  gen->add_option("--seed", gen_args.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (reduce->parsed()) return cmd_reduce(reduce_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (gen->parsed()) return cmd_gen(gen_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
