// sroman: Sierpiński graph generation, exact (Roman) domination, constructions
// and closed-form checks.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sroman/constructions.hpp"
#include "sroman/errors.hpp"
#include "sroman/formulas.hpp"
#include "sroman/generators.hpp"
#include "sroman/graph_io.hpp"
#include "sroman/json_io.hpp"
#include "sroman/sierpinski.hpp"
#include "sroman/solver.hpp"
#include "sroman/verify.hpp"

using namespace sroman;

namespace {

enum Exit { kPass = 0, kPropertyFailure = 1, kInputError = 2, kResourceError = 3 };

struct GraphSource {
  std::string input;
  std::string sierpinski;
  std::string family;
  std::size_t n = 0;
  std::size_t depth = 0;

  void attach(CLI::App& app) {
    app.add_option("input,--input", input, "Base graph file (edge list, or DOT ending in .dot)");
    app.add_option("--sierpinski", sierpinski, "Base graph file; the graph used is S(base, --depth)");
    app.add_option("--family", family, "Generated base graph instead of a file")
        ->check(CLI::IsMember({"path", "cycle", "complete", "star"}));
    app.add_option("--n", n, "Order of the generated base graph");
    app.add_option("--depth,-t", depth, "Build S(G,t) from the base graph");
  }

  Graph base() const {
    const int given = !input.empty() + !sierpinski.empty() + !family.empty();
    if (given != 1) throw InputError("give exactly one of an input file, --sierpinski or --family");
    if (!family.empty()) {
      if (n == 0) throw InputError("--family needs --n");
      if (family == "path") return path_graph(n);
      if (family == "cycle") return cycle_graph(n);
      if (family == "complete") return complete_graph(n);
      return star_graph(n);
    }
    const std::string& path = input.empty() ? sierpinski : input;
    if (path.size() > 4 && path.substr(path.size() - 4) == ".dot") {
      std::ifstream in(path);
      if (!in) throw InputError("cannot open " + path);
      return read_dot(in);
    }
    return read_edge_list_file(path);
  }

  // S(G,t) when a depth applies, otherwise nothing.
  std::optional<SierpinskiGraph> sierpinski_graph(const Graph& base) const {
    if (!sierpinski.empty() && depth == 0) throw InputError("--sierpinski needs --depth");
    if (depth == 0) return std::nullopt;
    return SierpinskiGraph::build(base, depth);
  }
};

struct Output {
  std::string path;

  void attach(CLI::App& app, const std::string& what) { app.add_option("--out,-o", path, what); }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
  }
};

struct SolverFlags {
  bool serial = false;
  int threads = 0;
  double timeout = 0;

  void attach(CLI::App& app) {
    app.add_flag("--serial", serial, "Use the serial reference search");
    app.add_option("--threads", threads, "OpenMP threads (0: default)");
    app.add_option("--timeout", timeout, "Seconds per exact solve (0: none)");
  }

  SolverOptions options() const {
    SolverOptions o;
    o.execution = serial ? Execution::serial : Execution::parallel;
    o.threads = threads;
    if (timeout > 0) o.timeout = std::chrono::milliseconds(static_cast<long long>(timeout * 1000));
    return o;
  }
};

void write_dot_file(const std::string& path, const Graph& g, const RomanFunction& f) {
  DotOptions d;
  for (auto x : f.labels()) d.roman_labels.push_back(x);
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_dot(out, g, d);
}

int run_gen(const GraphSource& src, const std::string& format, const Output& out) {
  const Graph base = src.base();
  auto s = src.sierpinski_graph(base);
  const Graph& g = s ? s->graph() : base;
  if (format == "edgelist") {
    out.write(to_edge_list(g));
  } else if (format == "dot") {
    DotOptions d;
    d.name = s ? "S" : "G";
    out.write(to_dot(g, d));
  } else {
    Json j;
    if (s) j["sierpinski"] = sierpinski_metadata(*s);
    j["order"] = g.order();
    j["size"] = g.size();
    j["graph"] = graph_hash(g);
    j["labels"] = Json::array();
    for (Vertex v = 0; v < g.order(); ++v) j["labels"].push_back(g.label(v));
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    out.write(j.dump(2) + "\n");
  }
  return kPass;
}

struct SolveArgs {
  bool domination = false;
  bool roman = false;
  bool oracle = false;
  bool json = false;
  bool stats = false;
  std::string dot;
};

int run_solve(const GraphSource& src, const SolveArgs& a, const SolverFlags& flags, const Output& out) {
  if (a.domination && a.roman) throw InputError("--roman and --domination are exclusive");
  const Graph base = src.base();
  auto s = src.sierpinski_graph(base);
  const Graph& g = s ? s->graph() : base;
  const auto options = flags.options();
  Certificate c;
  if (a.domination) {
    c = a.oracle ? brute_force_gamma(g, options) : gamma_exact(g, options);
  } else {
    c = a.oracle ? brute_force_gamma_r(g, options) : gamma_r_exact(g, options);
  }
  if (!validates(c, g)) throw InternalError("solver produced a witness that does not validate");

  if (!a.dot.empty()) {
    auto f = c.kind == Problem::roman ? c.function : RomanFunction::from_sets(g.order(), {}, c.dominating_set);
    write_dot_file(a.dot, g, f);
  }
  if (a.json) {
    Json j = certificate_to_json(c, g, a.stats);
    if (s && c.kind == Problem::roman) j["function"] = roman_to_json(c.function, *s);
    out.write(j.dump() + "\n");
    return kPass;
  }
  std::ostringstream text;
  text << (c.kind == Problem::roman ? "gamma_R" : "gamma") << " = " << c.value << "  (" << c.method << ", "
       << g.order() << " vertices)\n";
  auto name = [&](Vertex v) { return g.label(v); };
  if (c.kind == Problem::roman) {
    text << "B2:";
    for (Vertex v : c.function.b2()) text << ' ' << name(v);
    text << "\nB1:";
    for (Vertex v : c.function.b1()) text << ' ' << name(v);
    text << '\n';
  } else {
    text << "S:";
    for (Vertex v : c.dominating_set) text << ' ' << name(v);
    text << '\n';
  }
  if (a.stats)
    text << "nodes " << c.stats.nodes << ", passes " << c.stats.passes << ", " << c.stats.elapsed_seconds << " s\n";
  out.write(text.str());
  return kPass;
}

struct ConstructArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t t = 2;
  std::string base;
  std::string function;
  std::string dot;
};

int run_construct(const ConstructArgs& a, const SolverFlags& flags, const Output& out) {
  ConstructionReport r;
  if (a.family == "path") {
    r = path_construction(a.n, a.t);
  } else if (a.family == "cycle") {
    r = cycle_construction(a.n, a.t);
  } else if (a.family == "complete") {
    r = complete_graph_construction(a.n, a.t);
  } else {
    if (a.base.empty()) throw InputError("--family theorem needs --base");
    const Graph base = read_edge_list_file(a.base);
    if (a.function.empty()) {
      r = theorem_upper_bound_construction(base, gamma_r_exact(base, flags.options()), a.t);
    } else {
      std::ifstream in(a.function);
      if (!in) throw InputError("cannot open " + a.function);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed function JSON: ") + e.what());
      }
      r = theorem_upper_bound_construction(base, roman_from_json(j, base), a.t, flags.options());
    }
  }
  if (!a.dot.empty()) write_dot_file(a.dot, r.graph.graph(), r.function);
  out.write(report_to_json(r).dump() + "\n");
  const bool ok = r.valid && BigInt(r.actual_weight) <= r.predicted_weight;
  return ok ? kPass : kPropertyFailure;
}

int run_formula(const std::string& name, std::size_t n, std::size_t t, const SolverFlags& flags, const Output& out) {
  Json j;
  j["formula"] = name;
  j["n"] = n;
  j["t"] = t;
  if (name == "path-cycle") {
    j["value"] = value_or_bounds_to_json(ValueOrBounds::of(gamma_r_path_cycle(n)));
  } else if (name == "sierpinski-path") {
    j["value"] = value_or_bounds_to_json(ValueOrBounds::of(gamma_r_sierpinski_path(n, t)));
  } else if (name == "sierpinski-cycle") {
    j["value"] = value_or_bounds_to_json(gamma_r_sierpinski_cycle(n, t));
  } else if (name == "knt-gamma") {
    j["value"] = value_or_bounds_to_json(ValueOrBounds::of(gamma_knt(n, t)));
  } else if (name == "knt-gamma-r-upper") {
    j["value"] = value_or_bounds_to_json(ValueOrBounds{{}, {}, gamma_r_knt_upper(n, t)});
  } else if (name == "universal") {
    j["value"] = value_or_bounds_to_json(ValueOrBounds::of(universal_vertex_value(n, t)));
  } else if (name == "min-degree") {
    j["value"] = value_or_bounds_to_json(ValueOrBounds{{}, min_degree_lower_bound(n, t), {}});
  } else {
    auto k = knt_lower_bound_for_any_graph(n, t, flags.options());
    j["value"] = value_or_bounds_to_json(ValueOrBounds{{}, k.value, {}});
    j["method"] = k.method;
  }
  out.write(j.dump() + "\n");
  return kPass;
}

std::string cell(const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : "-"; }

std::string formula_cell(const ValueOrBounds& v) {
  if (v.exact) return to_string(*v.exact);
  return "[" + (v.lower ? to_string(*v.lower) : std::string("-")) + "," +
         (v.upper ? to_string(*v.upper) : std::string("-")) + "]";
}

void write_lines(const std::string& path, const std::vector<Json>& lines) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  for (const auto& j : lines) out << j.dump() << '\n';
}

int run_verify(VerifyOptions options, const std::vector<std::string>& families, const SolverFlags& flags,
               const Output& out) {
  if (!families.empty() && !(families.size() == 1 && families[0] == "all")) options.families = families;
  options.solver = flags.options();
  auto rows = verify(options);
  std::vector<Json> lines;
  std::cout << std::left << std::setw(12) << "theorem" << std::setw(18) << "instance" << std::setw(12) << "formula"
            << std::setw(8) << "solver" << std::setw(14) << "construction" << "status\n";
  for (const auto& r : rows) {
    std::cout << std::setw(12) << r.theorem << std::setw(18) << r.instance << std::setw(12) << formula_cell(r.formula)
              << std::setw(8) << cell(r.solver_value) << std::setw(14) << cell(r.construction_weight) << r.status;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << '\n';
    lines.push_back(row_to_json(r));
  }
  write_lines(out.path, lines);
  return exit_status(rows);
}

int run_sweep(SweepOptions options, const SolverFlags& flags, const Output& out) {
  options.solver = flags.options();
  auto rows = sweep(options);
  std::vector<Json> lines;
  std::cout << std::left << std::setw(6) << "row" << std::setw(4) << "n" << std::setw(4) << "m" << std::setw(9)
            << "g/gR" << std::setw(12) << "S: g/gR" << std::setw(8) << "bound" << "status\n";
  for (const auto& r : rows) {
    std::cout << std::setw(6) << r.index << std::setw(4) << r.base.order() << std::setw(4) << r.base.size()
              << std::setw(9) << (std::to_string(r.gamma) + "/" + std::to_string(r.gamma_r)) << std::setw(12)
              << (std::to_string(r.s_gamma) + "/" + std::to_string(r.s_gamma_r)) << std::setw(8) << to_string(r.bound)
              << r.status;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << '\n';
    lines.push_back(row_to_json(r));
  }
  std::cout << "seed " << options.seed << ", " << rows.size() << " instances\n";
  write_lines(out.path, lines);
  return exit_status(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Sierpiński graphs and Roman domination"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Write S(G,t) (or G) as an edge list, DOT or JSON");
  GraphSource gen_src;
  gen_src.attach(*gen);
  std::string gen_format = "edgelist";
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"edgelist", "dot", "json"}));
  Output gen_out;
  gen_out.attach(*gen, "Output file (default: stdout)");

  auto* solve = app.add_subcommand("solve", "Exact gamma_R (default) or gamma with a certificate");
  GraphSource solve_src;
  solve_src.attach(*solve);
  SolveArgs solve_args;
  solve->add_flag("--roman", solve_args.roman, "Roman domination number (default)");
  solve->add_flag("--domination", solve_args.domination, "Domination number");
  solve->add_flag("--oracle", solve_args.oracle, "Use subset enumeration instead of branch-and-bound");
  solve->add_flag("--json", solve_args.json, "Print the certificate as JSON");
  solve->add_flag("--stats", solve_args.stats, "Include search statistics");
  solve->add_option("--dot", solve_args.dot, "Also write the labelled graph as DOT");
  SolverFlags solve_flags;
  solve_flags.attach(*solve);
  Output solve_out;
  solve_out.attach(*solve, "Output file (default: stdout)");

  auto* construct = app.add_subcommand("construct", "Build one of the explicit Roman dominating functions");
  ConstructArgs cons;
  construct->add_option("--family", cons.family)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "theorem"}));
  construct->add_option("--n", cons.n, "Base order (path, cycle, complete)");
  construct->add_option("--t,--depth", cons.t, "Depth t");
  construct->add_option("--base", cons.base, "Base graph edge list (theorem)");
  construct->add_option("--function", cons.function, "gamma_R-function of the base graph as JSON (theorem)");
  construct->add_option("--dot", cons.dot, "Also write the labelled S(G,t) as DOT");
  SolverFlags cons_flags;
  cons_flags.attach(*construct);
  Output cons_out;
  cons_out.attach(*construct, "Report file (default: stdout)");

  auto* formula = app.add_subcommand("formula", "Evaluate a closed form as JSON");
  std::string formula_name;
  std::size_t formula_n = 0, formula_t = 2;
  formula->add_option("--name", formula_name)
      ->required()
      ->check(CLI::IsMember({"path-cycle", "sierpinski-path", "sierpinski-cycle", "knt-gamma", "knt-gamma-r-upper",
                             "universal", "min-degree", "knt-lower"}));
  formula->add_option("--n", formula_n)->required();
  formula->add_option("--t", formula_t);
  SolverFlags formula_flags;
  formula_flags.attach(*formula);
  Output formula_out;
  formula_out.attach(*formula, "Output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Compare formulas, solver and constructions");
  VerifyOptions verify_options;
  std::vector<std::string> families;
  std::size_t verify_n_min = 0;
  verify_cmd->add_option("--family", families, "paths, cycles, complete, universal or all (repeatable)");
  verify_cmd->add_option("--n-min", verify_n_min);
  verify_cmd->add_option("--n-max", verify_options.n_max);
  verify_cmd->add_option("--t-min", verify_options.t_min);
  verify_cmd->add_option("--t-max", verify_options.t_max);
  verify_cmd->add_option("--max-solver-order", verify_options.max_solver_order);
  SolverFlags verify_flags;
  verify_flags.attach(*verify_cmd);
  Output verify_out;
  verify_out.attach(*verify_cmd, "JSON lines file");

  auto* sweep_cmd = app.add_subcommand("sweep", "Property checks on random connected base graphs");
  SweepOptions sweep_options;
  sweep_cmd->add_option("--count", sweep_options.count);
  sweep_cmd->add_option("--n-min", sweep_options.n_min);
  sweep_cmd->add_option("--n-max", sweep_options.n_max);
  sweep_cmd->add_option("--t", sweep_options.t);
  sweep_cmd->add_option("--p", sweep_options.edge_probability, "Probability of each non-tree edge");
  sweep_cmd->add_option("--seed", sweep_options.seed);
  SolverFlags sweep_flags;
  sweep_flags.attach(*sweep_cmd);
  Output sweep_out;
  sweep_out.attach(*sweep_cmd, "JSON lines file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*gen) return run_gen(gen_src, gen_format, gen_out);
    if (*solve) return run_solve(solve_src, solve_args, solve_flags, solve_out);
    if (*construct) return run_construct(cons, cons_flags, cons_out);
    if (*formula) return run_formula(formula_name, formula_n, formula_t, formula_flags, formula_out);
    if (*verify_cmd) {
      if (verify_n_min > 0) verify_options.n_min = verify_n_min;
      return run_verify(verify_options, families, verify_flags, verify_out);
    }
    return run_sweep(sweep_options, sweep_flags, sweep_out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResourceError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kPropertyFailure;
  }
}
