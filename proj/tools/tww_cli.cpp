#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "tww/bounds.hpp"
#include "tww/elimination.hpp"
#include "tww/encodings.hpp"
#include "tww/error.hpp"
#include "tww/experiments.hpp"
#include "tww/generators.hpp"
#include "tww/graph_io.hpp"
#include "tww/modular.hpp"
#include "tww/search.hpp"

using namespace tww;

namespace {

enum Exit { ok = 0, mismatch = 1, input_error = 2, unknown = 3, internal = 4 };

/// Failure in user-supplied input or arguments.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string path;
  std::string named;

  void add_to(CLI::App* cmd) {
    cmd->add_option("graph", path, "graph file (.g6 graph6, otherwise DIMACS edge)");
    cmd->add_option("--named", named, "built-in graph, e.g. wagner, paley9, grid6x8");
  }

  Graph load() const {
    if (path.empty() == named.empty()) throw InputError("give exactly one of a graph file or --named");
    if (!named.empty()) {
      try {
        return named_graph(named);
      } catch (const ContractError& e) {
        throw InputError(e.what());
      }
    }
    if (!std::ifstream(path)) throw InputError("cannot read " + path);
    return read_graph_file(path);
  }
};

struct SolverFlags {
  std::string mode = "rel";
  double timeout = 300;
  std::string solver;
  bool parallel = false;
  int oracle_max = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "encoding: rel or abs")->check(CLI::IsMember({"rel", "relative", "abs", "absolute"}));
    cmd->add_option("--timeout", timeout, "seconds per SAT probe")->check(CLI::PositiveNumber);
    cmd->add_option("--solver", solver, "SAT solver executable (default: $TWW_SAT_SOLVER, cadical, kissat, tww-sat)");
    cmd->add_flag("--parallel", parallel, "solve prime members concurrently");
    cmd->add_option("--oracle-max", oracle_max, "prime members with at most this many vertices use exhaustive search")
        ->check(CLI::Range(0, kOracleMaxVertices));
  }

  SearchOptions options() const {
    SearchOptions o;
    o.encoding = parse_encoding_mode(mode);
    o.solver.executable = solver;
    o.solver.timeout_seconds = timeout;
    o.parallel = parallel;
    o.oracle_max_vertices = oracle_max;
    return o;
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

/// Writes to `path`, or to stdout when it is empty or "-".
template <class F>
void emit(const std::string& path, F&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  auto out = open_out(path);
  body(out);
}

int cmd_compute(const GraphSource& src, const SolverFlags& flags, const std::string& cert, bool breakdown, bool probes) {
  const Graph g = src.load();
  const auto res = compute(g, flags.options());
  if (breakdown) {
    for (std::size_t i = 0; i < res.members.size(); ++i) {
      const auto& m = res.members[i];
      std::cout << "member " << i << " n=" << m.vertices << " m=" << m.edges << " lb=" << m.lb << " ub=" << m.greedy_ub;
      if (m.status == SearchStatus::exact) std::cout << " tww=" << m.upper;
      else std::cout << " tww=UNKNOWN[" << m.lower << "," << m.upper << "]";
      std::cout << " (" << m.provenance << ")\n";
    }
  }
  if (probes) {
    for (const auto& p : res.probes)
      std::cout << "probe member=" << p.member << " d=" << p.d << " " << to_string(p.verdict) << " vars=" << p.vars
                << " clauses=" << p.clauses << " seconds=" << p.seconds << '\n';
  }
  if (!cert.empty()) emit(cert, [&](std::ostream& out) { write_certificate(out, decomposition_from_contractions(g, res.certificate), res.width); });
  if (res.status == SearchStatus::exact) {
    std::cout << "tww " << res.width << '\n';
    return ok;
  }
  std::cout << "tww UNKNOWN [" << res.lower << ", " << res.width << "]\n";
  return unknown;
}

int cmd_bounds(const GraphSource& src, int order, bool max_red) {
  const Graph g = src.load();
  const int n = g.order();
  std::cout << "lb1 " << (n >= 2 ? lb1(g) : 0) << '\n';
  for (int r = 2; r <= order && r + 1 <= n; ++r) std::cout << "lb" << r << ' ' << lbr(g, r) << '\n';
  std::cout << "ub_greedy " << greedy_ub(g, max_red ? GreedyScore::max_red_degree : GreedyScore::parent_degree).ub << '\n';
  return ok;
}

int cmd_encode(const GraphSource& src, int d, const std::string& mode, const std::string& out_path, std::string map_path) {
  const Graph g = src.load();
  if (g.order() < 2) throw InputError("encoding needs at least two vertices");
  const auto inst = encode(g, d, parse_encoding_mode(mode));
  emit(out_path, [&](std::ostream& out) { emit_dimacs(out, inst.formula); });
  if (map_path.empty() && !out_path.empty() && out_path != "-") map_path = out_path + ".map";
  if (!map_path.empty()) {
    auto map = open_out(map_path);
    inst.vars.write(map);
  }
  std::cerr << "c " << inst.formula.var_count() << " variables, " << inst.formula.clause_count() << " clauses\n";
  return ok;
}

int cmd_decode(const GraphSource& src, int d, const std::string& mode, const std::string& model_path, const std::string& cert) {
  const Graph g = src.load();
  if (g.order() < 2) throw InputError("decoding needs at least two vertices");
  const auto inst = encode(g, d, parse_encoding_mode(mode));
  std::ifstream in(model_path);
  if (!in) throw InputError("cannot read " + model_path);
  const auto outcome = parse_solver_output(in, inst.formula.var_count());
  if (outcome.verdict != Verdict::sat) {
    std::cout << to_string(outcome.verdict) << (outcome.message.empty() ? "" : ": " + outcome.message) << '\n';
    return outcome.verdict == Verdict::unsat ? ok : input_error;
  }
  if (!inst.formula.satisfied_by(outcome.model)) throw InputError("model does not satisfy the formula");
  const auto dec = decode(inst, outcome.model);
  const int width = elimination_width(g, dec);
  emit(cert, [&](std::ostream& out) { write_certificate(out, dec, width); });
  if (!cert.empty() && cert != "-") std::cout << "width " << width << '\n';
  return ok;
}

int cmd_verify(const GraphSource& src, const std::string& cert_path) {
  const Graph g = src.load();
  std::ifstream in(cert_path);
  if (!in) throw InputError("cannot read " + cert_path);
  Certificate cert;
  try {
    cert = read_certificate(in);
  } catch (const CertificateError& e) {
    std::cout << "invalid certificate: " << e.what() << '\n';
    return mismatch;
  }
  if (cert.decomposition.size() != g.order()) {
    std::cout << "invalid certificate: n " << cert.decomposition.size() << " but graph has " << g.order() << " vertices\n";
    return mismatch;
  }
  const auto seq = contractions_from_decomposition(cert.decomposition);
  std::vector<int> replay;
  try {
    replay = red_degree_profile(g, seq);
  } catch (const CertificateError& e) {
    std::cout << "invalid certificate: " << e.what() << '\n';
    return mismatch;
  }
  const auto elim = eliminate(g, cert.decomposition);
  for (std::size_t i = 0; i < replay.size(); ++i) {
    if (replay[i] != elim.max_degree[i + 1]) {
      std::cout << "step " << i << " (p " << seq.steps[i].child << ' ' << seq.steps[i].parent << "): trigraph replay "
                << replay[i] << ", elimination sequence " << elim.max_degree[i + 1] << '\n';
      return internal;
    }
  }
  std::cout << "width " << elim.width << '\n';
  if (elim.width == cert.width) return ok;
  std::cout << "declared width " << cert.width << " differs from computed width " << elim.width << '\n';
  for (std::size_t i = 0; i < replay.size(); ++i) {
    if (replay[i] > cert.width) {
      std::cout << "step " << i << " (p " << seq.steps[i].child << ' ' << seq.steps[i].parent << "): red degree "
                << replay[i] << " exceeds " << cert.width << '\n';
      break;
    }
  }
  return mismatch;
}

int cmd_prime(const GraphSource& src, const std::string& out_path) {
  const Graph g = src.load();
  const auto members = prime_set(g);
  emit(out_path, [&](std::ostream& out) {
    for (const auto& m : members) {
      std::ostringstream reps;
      for (std::size_t i = 0; i < m.representatives.size(); ++i) reps << (i ? " " : "") << m.representatives[i];
      write_edge_list(out, m.graph, {"provenance: " + m.provenance, "representatives: " + reps.str()});
    }
  });
  std::cerr << "c " << members.size() << " prime graphs\n";
  return ok;
}

struct ExperimentFlags {
  std::string kind;
  std::string out;
  std::vector<int> orders{10, 15};
  int trials = 20;
  std::uint64_t seed = 1;
  std::vector<std::string> names{"Wagner", "Moser", "Peterson", "Grötzsch", "Chvátal", "Dürer", "Franklin", "Frucht",
                                 "Goldner", "Herschel", "Tietze", "Folkman", "Hoffman", "Poussin", "Clebsch", "Shrikhande"};
  std::vector<int> qs{9, 13, 17};
  std::string input;
  int target = 2;
  bool all_graphs = false;
  bool half_edges = false;
};

int cmd_experiment(const ExperimentFlags& x, const SolverFlags& flags) {
  const auto opts = flags.options();
  int status = ok;
  if (x.kind == "random") {
    RandomExperimentConfig cfg;
    cfg.orders = x.orders;
    cfg.trials = x.trials;
    cfg.seed = x.seed;
    cfg.search = opts;
    const auto rows = random_experiment(cfg);
    for (const auto& r : rows)
      if (r.unknown) {
        std::cerr << "n=" << r.n << " p=" << r.p << ": " << r.unknown << " graphs UNKNOWN, excluded from the mean\n";
        status = unknown;
      }
    emit(x.out, [&](std::ostream& out) { write_random_csv(out, rows); });
  } else if (x.kind == "named" || x.kind == "paley") {
    std::vector<std::pair<std::string, Graph>> graphs;
    try {
      if (x.kind == "named")
        for (const auto& name : x.names) graphs.emplace_back(name, named_graph(name));
      else
        for (int q : x.qs) graphs.emplace_back("Paley" + std::to_string(q), paley(q));
    } catch (const ContractError& e) {
      throw InputError(e.what());
    }
    std::vector<TableRow> rows;
    for (const auto& [name, g] : graphs) {
      rows.push_back(table_row(name, g, opts));
      if (rows.back().status != SearchStatus::exact) {
        std::cerr << name << ": UNKNOWN\n";
        status = unknown;
      }
    }
    emit(x.out, [&](std::ostream& out) { write_table_csv(out, rows); });
  } else {
    if (x.input.empty()) throw InputError("numbers needs --input <graph6 stream>");
    std::ifstream in(x.input);
    if (!in) throw InputError("cannot read " + x.input);
    NumbersOptions nopts;
    nopts.prime_only = !x.all_graphs;
    nopts.half_edges_only = x.half_edges;
    nopts.search = opts;
    const auto report = sweep_numbers(in, x.target, nopts, [](std::size_t line, const std::string& msg) {
      std::cerr << "line " << line << ": " << msg << '\n';
    });
    emit(x.out, [&](std::ostream& out) { write_numbers_csv(out, report); });
    std::cerr << "c " << report.graphs << " graphs, " << report.considered << " considered, " << report.parse_errors
              << " parse errors, " << report.unknown << " unknown\n";
    if (report.min_order_for_target >= 0)
      std::cerr << "c smallest graph of width " << x.target << ": n=" << report.min_order_for_target << ' '
                << report.target_witness << '\n';
    else
      std::cerr << "c no graph of width " << x.target << '\n';
    if (report.unknown) status = unknown;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact twin-width via SAT"};
  app.require_subcommand(1);

  GraphSource src;
  SolverFlags flags;

  std::string cert;
  bool breakdown = false, probes = false;
  auto* compute_cmd = app.add_subcommand("compute", "exact twin-width with a verified certificate");
  src.add_to(compute_cmd);
  flags.add_to(compute_cmd);
  compute_cmd->add_option("--cert", cert, "write the certificate here ('-' for stdout)");
  compute_cmd->add_flag("--breakdown", breakdown, "print per-prime-member widths");
  compute_cmd->add_flag("--probes", probes, "print the SAT probe log");

  int order = 2;
  bool max_red = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "lower bounds lb_r and the greedy upper bound");
  src.add_to(bounds_cmd);
  bounds_cmd->add_option("--order", order, "largest r for lb_r")->check(CLI::Range(1, 3));
  bounds_cmd->add_flag("--max-red", max_red, "greedy scores by maximum red degree");

  int d = 0;
  std::string mode = "rel", out_path, map_path, model_path;
  auto* encode_cmd = app.add_subcommand("encode", "write F(G, d) as DIMACS CNF and a variable map");
  src.add_to(encode_cmd);
  encode_cmd->add_option("-d", d, "width bound")->required()->check(CLI::NonNegativeNumber);
  encode_cmd->add_option("--mode", mode, "encoding: rel or abs")->check(CLI::IsMember({"rel", "relative", "abs", "absolute"}));
  encode_cmd->add_option("-o,--output", out_path, "CNF file (stdout if omitted)");
  encode_cmd->add_option("--map", map_path, "variable map file (default <output>.map)");

  auto* decode_cmd = app.add_subcommand("decode", "turn a solver model of F(G, d) into a certificate");
  src.add_to(decode_cmd);
  decode_cmd->add_option("-d", d, "width bound")->required()->check(CLI::NonNegativeNumber);
  decode_cmd->add_option("--mode", mode, "encoding: rel or abs")->check(CLI::IsMember({"rel", "relative", "abs", "absolute"}));
  decode_cmd->add_option("--model", model_path, "solver output with s/v lines")->required();
  decode_cmd->add_option("--cert", cert, "certificate file (stdout if omitted)");

  auto* verify_cmd = app.add_subcommand("verify", "re-score a certificate with both evaluators");
  src.add_to(verify_cmd);
  verify_cmd->add_option("--cert", cert, "certificate file")->required();

  auto* prime_cmd = app.add_subcommand("prime", "write prime(G) as a multi-graph edge list");
  src.add_to(prime_cmd);
  prime_cmd->add_option("-o,--output", out_path, "output file (stdout if omitted)");

  ExperimentFlags x;
  auto* exp_cmd = app.add_subcommand("experiment", "CSV experiment drivers");
  exp_cmd->add_option("kind", x.kind, "random, named, paley or numbers")->required()->check(CLI::IsMember({"random", "named", "paley", "numbers"}));
  flags.add_to(exp_cmd);
  exp_cmd->add_option("-o,--output", x.out, "CSV file (stdout if omitted)");
  exp_cmd->add_option("--n", x.orders, "random: graph orders");
  exp_cmd->add_option("--trials", x.trials, "random: graphs per (n, p)")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--seed", x.seed, "random: base seed");
  exp_cmd->add_option("--graphs", x.names, "named: graph names");
  exp_cmd->add_option("--q", x.qs, "paley: field sizes");
  exp_cmd->add_option("--input", x.input, "numbers: graph6 stream");
  exp_cmd->add_option("--target", x.target, "numbers: width whose smallest witness is reported");
  exp_cmd->add_flag("--all", x.all_graphs, "numbers: include graphs that are not prime");
  exp_cmd->add_flag("--half-edges", x.half_edges, "numbers: skip graphs with more than C(n,2)/2 edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*compute_cmd) return cmd_compute(src, flags, cert, breakdown, probes);
    if (*bounds_cmd) return cmd_bounds(src, order, max_red);
    if (*encode_cmd) return cmd_encode(src, d, mode, out_path, map_path);
    if (*decode_cmd) return cmd_decode(src, d, mode, model_path, cert);
    if (*verify_cmd) return cmd_verify(src, cert);
    if (*prime_cmd) return cmd_prime(src, out_path);
    if (*exp_cmd) return cmd_experiment(x, flags);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  } catch (const EncodingSoundnessError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return internal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return internal;
  }
  return ok;
}
