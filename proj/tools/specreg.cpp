// specreg: command-line front end.
//
// exit codes: 0 ok, 2 hypothesis not met, 3 input/parse error,
//             4 certificate violation, 5 internal error

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specreg/decompose.hpp"
#include "specreg/edge_list.hpp"
#include "specreg/generators.hpp"
#include "specreg/pipeline.hpp"
#include "specreg/regularize.hpp"
#include "specreg/report.hpp"
#include "specreg/spectral.hpp"
#include "specreg/sweep.hpp"

namespace {

using namespace specreg;
using report::json;

enum Exit { kOk = 0, kHypothesis = 2, kInput = 3, kViolation = 4, kInternal = 5 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::hypothesis_not_met:
    case ErrorKind::no_edges:
    case ErrorKind::case3_witness_missing:
      return kHypothesis;
    case ErrorKind::parse_error:
    case ErrorKind::self_loop:
    case ErrorKind::duplicate_edge:
    case ErrorKind::vertex_out_of_range:
    case ErrorKind::parameter_out_of_range:
    case ErrorKind::overflow:
    case ErrorKind::empty_graph:
      return kInput;
    case ErrorKind::collapsed:
      return kViolation;
    default:
      return kInternal;
  }
}

struct Globals {
  std::string input = "-";
  std::string output = "-";
  std::string format;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::uint64_t max_iter = 100000;
  std::optional<std::size_t> n;
  bool lenient = false;

  SolverConfig solver() const {
    SolverConfig cfg;
    cfg.tol = tol;
    cfg.max_iterations = max_iter;
    return cfg;
  }
};

struct StageFlags {
  double c = 1.0;
  double eps = 0.5;
  std::optional<std::uint64_t> p_override;
  bool force = false;
  double k_target = 64.0;
  double theta = 0.5;
  std::uint64_t max_rounds = 0;
  std::string graph_out;
  std::string trace_out;
  double K = 1.0;
};

struct SweepFlags {
  std::string family = "complete";
  std::vector<std::size_t> n_values;
  std::vector<double> eps_values{0.5};
  std::vector<double> c_values{1.0};
  std::uint64_t reps = 1;
  std::size_t a = 0;
  std::size_t b = 0;
  std::optional<double> xi;
  double prob = 0.5;
  std::uint64_t edges = 0;
};

Graph read_graph(const Globals& g) {
  EdgeListOptions opts;
  opts.n = g.n;
  opts.lenient = g.lenient;
  ParsedGraph parsed;
  if (g.input == "-") {
    parsed = parse_edge_list(std::cin, opts);
  } else {
    std::ifstream in(g.input);
    if (!in) throw Error(ErrorKind::parse_error, "cannot open input '" + g.input + "'");
    parsed = parse_edge_list(in, opts);
  }
  if (parsed.warnings.duplicates_dropped + parsed.warnings.self_loops_dropped > 0) {
    std::cerr << "warning: dropped " << parsed.warnings.duplicates_dropped << " duplicate edges and "
              << parsed.warnings.self_loops_dropped << " self-loops\n";
  }
  return std::move(parsed.graph);
}

void write_to(const std::string& path, const std::string& bytes) {
  if (path == "-" || path.empty()) {
    std::cout << bytes;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::parameter_out_of_range, "cannot open output '" + path + "'");
  out << bytes;
}

void emit(const Globals& g, const json& j, const std::string& csv = {}) {
  const std::string fmt = g.format.empty() ? "json" : g.format;
  if (fmt == "json") {
    write_to(g.output, report::emit_json(j));
  } else if (fmt == "csv") {
    write_to(g.output, csv.empty() ? report::flat_csv(report::rounded(j)) : csv);
  } else {
    throw Error(ErrorKind::parameter_out_of_range, "format '" + fmt + "' is not available for this command");
  }
}

void write_graph(const StageFlags& f, const Subgraph& s) {
  if (!f.graph_out.empty()) write_to(f.graph_out, format_edge_list(s.graph));
}

DecomposeParams decompose_params(const Globals& g, const StageFlags& f) {
  DecomposeParams p;
  p.c = f.c;
  p.eps = f.eps;
  p.p_override = f.p_override;
  p.force = f.force;
  p.solver = g.solver();
  return p;
}

RegularizeParams regularize_params(const StageFlags& f) {
  RegularizeParams r;
  r.eps = f.eps;
  r.c = f.c;
  r.K_target = f.k_target;
  r.theta = f.theta;
  r.max_rounds = f.max_rounds;
  return r;
}

GenSpec gen_spec(const SweepFlags& s, std::size_t n, std::uint64_t seed) {
  GenSpec spec;
  spec.family = family_from_string(s.family);
  spec.n = n;
  spec.a = s.a;
  spec.b = s.b;
  spec.xi = s.xi;
  spec.probability = s.prob;
  spec.edges = s.edges;
  spec.seed = seed;
  return spec;
}

int run_generate(const Globals& g, const SweepFlags& s) {
  const std::size_t n = s.n_values.empty() ? 0 : s.n_values.front();
  const Graph graph = generate(gen_spec(s, n, g.seed));
  const std::string fmt = g.format.empty() ? "edgelist" : g.format;
  if (fmt != "edgelist") throw Error(ErrorKind::parameter_out_of_range, "generate writes edge lists only");
  write_to(g.output, format_edge_list(graph));
  return kOk;
}

int run_spectral(const Globals& g) {
  const Graph graph = read_graph(g);
  emit(g, report::spectral_report(graph, dominant_eigenpair(graph, g.solver())));
  return kOk;
}

int run_audit(const Globals& g, const StageFlags& f, bool eps_given) {
  const Graph graph = read_graph(g);
  const AuditRecord a = audit(graph, g.solver(), eps_given ? std::optional<double>(f.eps) : std::nullopt);
  emit(g, report::audit_report(a));
  return a.violation_count() > 0 ? kViolation : kOk;
}

void report_violations(const std::vector<Certificate>& certs, const std::string& where) {
  for (const Certificate& c : certs) {
    if (c.violated()) {
      std::cerr << "violation: " << where << c.name << ": " << c.lhs << ' ' << to_string(c.relation) << ' ' << c.rhs
                << " (slack " << c.slack << ")\n";
    }
  }
}

void report_violations(const DecomposeTrace& t) {
  for (const auto& s : t.steps) report_violations(s.certificates, "step " + std::to_string(s.index) + ": ");
  report_violations(t.theorem_checks, "");
}

int run_decompose(const Globals& g, const StageFlags& f) {
  const Graph graph = read_graph(g);
  const DecomposeResult r = decompose(graph, decompose_params(g, f));
  for (const auto& w : r.trace.warnings) std::cerr << "warning: " << w << '\n';
  report_violations(r.trace);
  if (!f.trace_out.empty()) {
    Globals to_trace = g;
    to_trace.output = f.trace_out;
    emit(to_trace, report::decompose_report(r), report::decompose_csv(r.trace));
    write_to(g.output, format_edge_list(r.output.graph));
  } else {
    emit(g, report::decompose_report(r), report::decompose_csv(r.trace));
  }
  write_graph(f, r.output);
  return r.trace.violation_count() > 0 ? kViolation : kOk;
}

int run_regularize(const Globals& g, const StageFlags& f) {
  const Graph graph = read_graph(g);
  const RegularizeResult r = almost_regularize(graph, regularize_params(f));
  report_violations(r.report.checks, "");
  emit(g, report::regularize_report(r));
  write_graph(f, r.output);
  if (r.report.collapsed) std::cerr << "warning: peeling removed every edge; reporting the last non-empty graph\n";
  return r.report.collapsed || r.report.violation_count() > 0 ? kViolation : kOk;
}

int run_pipeline_cmd(const Globals& g, const StageFlags& f) {
  const Graph graph = read_graph(g);
  const PipelineResult r = run_pipeline(graph, decompose_params(g, f), regularize_params(f));
  for (const auto& w : r.report.decompose.warnings) std::cerr << "warning: " << w << '\n';
  report_violations(r.report.decompose);
  report_violations(r.report.regularity.checks, "regularize: ");
  emit(g, report::pipeline_report(r));
  write_graph(f, r.output);
  return r.report.violation_count() > 0 ? kViolation : kOk;
}

int run_verify(const Globals& g, const StageFlags& f) {
  const Graph graph = read_graph(g);
  const RegularityWitness w = verify_almost_regular(graph, f.K);
  emit(g, report::verify_report(graph, f.K, w));
  return w.holds ? kOk : kViolation;
}

int run_sweep(const Globals& g, const StageFlags& f, const SweepFlags& s) {
  SweepSpec spec;
  spec.generator = gen_spec(s, 0, g.seed);
  spec.n_values = s.n_values;
  spec.eps_values = s.eps_values;
  spec.c_values = s.c_values;
  spec.repetitions = s.reps;
  spec.seed_base = g.seed;
  spec.p_override = f.p_override;
  spec.force = f.force;
  spec.regularize = regularize_params(f);
  spec.solver = g.solver();
  spec.output_path = g.output;
  const std::vector<SweepRow> rows = sweep(spec);
  const std::string fmt = g.format.empty() ? "csv" : g.format;
  if (fmt == "csv") {
    write_to(g.output, sweep_csv(rows));
  } else if (fmt == "json") {
    json j;
    j["schema_version"] = report::kSchemaVersion;
    j["kind"] = "sweep";
    j["columns"] = kSweepColumns;
    j["csv"] = sweep_csv(rows);
    write_to(g.output, report::emit_json(j));
  } else {
    throw Error(ErrorKind::parameter_out_of_range, "sweep writes csv or json");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral-radius dense subgraph extraction and regularization"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--input", g.input, "Edge-list file ('-' for stdin)");
  app.add_option("--output", g.output, "Report destination ('-' for stdout)");
  app.add_option("--format", g.format, "json | csv | edgelist");
  app.add_option("--seed", g.seed, "Generator seed / sweep seed base");
  app.add_option("--tol", g.tol, "Eigen-residual tolerance");
  app.add_option("--max-iter", g.max_iter, "Power-iteration cap");
  app.add_option("--n", g.n, "Vertex count for edge-list input (default 1 + max id)");
  app.add_flag("--lenient", g.lenient, "Drop self-loops and duplicate edges instead of failing");

  StageFlags f;
  SweepFlags s;
  bool eps_given = false;

  auto add_decompose_flags = [&](CLI::App* sub) {
    sub->add_option("--c", f.c, "Hypothesis constant c");
    sub->add_option("--eps,--epsilon", f.eps, "Exponent eps");
    sub->add_option("--p-override,--p", f.p_override, "Replace the part count p (non-theorem regime)");
    sub->add_flag("--force", f.force, "Continue past a failed hypothesis or missing witness");
  };
  auto add_regularize_flags = [&](CLI::App* sub) {
    sub->add_option("--k-target", f.k_target, "Acceptable Delta/delta ratio");
    sub->add_option("--theta", f.theta, "Peeling threshold fraction");
    sub->add_option("--max-rounds", f.max_rounds, "Round cap (0: 10 ceil(log2 n))");
  };
  auto add_generator_flags = [&](CLI::App* sub, bool many) {
    sub->add_option("--family", s.family, "complete | complete_bipartite | star | path | cycle | "
                                          "subdivided_star | gnp | gnm")
        ->required();
    if (many) {
      sub->add_option("--n-values", s.n_values, "Vertex counts")->required();
    } else {
      sub->add_option("--order", s.n_values, "Vertex count")->expected(1);
    }
    sub->add_option("--a", s.a, "complete_bipartite side a");
    sub->add_option("--b", s.b, "complete_bipartite side b");
    sub->add_option("--xi", s.xi, "Exponent for subdivided_star / complete_bipartite");
    sub->add_option("--prob", s.prob, "gnp edge probability");
    sub->add_option("--edges", s.edges, "gnm edge count");
  };

  auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph as an edge list");
  add_generator_flags(generate_cmd, false);
  auto* spectral_cmd = app.add_subcommand("spectral", "Dominant eigenpair");
  auto* audit_cmd = app.add_subcommand("audit", "Degree/spectral sandwich audit");
  audit_cmd->add_option("--eps", f.eps, "Also compare lambda with n^{1/2+eps}/2")->each([&](const std::string&) {
    eps_given = true;
  });
  auto* decompose_cmd = app.add_subcommand("decompose", "Dense subgraph extraction with certificates");
  add_decompose_flags(decompose_cmd);
  decompose_cmd->add_option("--graph-out", f.graph_out, "Write the output subgraph as an edge list");
  decompose_cmd->add_option("--trace-out", f.trace_out,
                            "Write the JSON trace here and the output edge list to --output");
  auto* regularize_cmd = app.add_subcommand("regularize", "Almost-regular subgraph");
  regularize_cmd->add_option("--eps", f.eps, "Density exponent");
  regularize_cmd->add_option("--c", f.c, "Density constant");
  add_regularize_flags(regularize_cmd);
  regularize_cmd->add_option("--graph-out", f.graph_out, "Write the output subgraph as an edge list");
  auto* pipeline_cmd = app.add_subcommand("pipeline", "decompose then regularize");
  add_decompose_flags(pipeline_cmd);
  add_regularize_flags(pipeline_cmd);
  pipeline_cmd->add_option("--graph-out", f.graph_out, "Write the output subgraph as an edge list");
  auto* verify_cmd = app.add_subcommand("verify", "Check Delta <= K delta");
  verify_cmd->add_option("--K", f.K, "Regularity ratio")->required();
  auto* sweep_cmd = app.add_subcommand("sweep", "Pipeline over a parameter grid (CSV)");
  add_generator_flags(sweep_cmd, true);
  sweep_cmd->add_option("--eps-values", s.eps_values, "eps grid");
  sweep_cmd->add_option("--c-values", s.c_values, "c grid");
  sweep_cmd->add_option("--reps", s.reps, "Repetitions per cell");
  sweep_cmd->add_option("--p-override", f.p_override, "Replace the part count p");
  sweep_cmd->add_flag("--force", f.force, "Continue past a failed hypothesis or missing witness");
  add_regularize_flags(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*generate_cmd) return run_generate(g, s);
    if (*spectral_cmd) return run_spectral(g);
    if (*audit_cmd) return run_audit(g, f, eps_given);
    if (*decompose_cmd) return run_decompose(g, f);
    if (*regularize_cmd) return run_regularize(g, f);
    if (*pipeline_cmd) return run_pipeline_cmd(g, f);
    if (*verify_cmd) return run_verify(g, f);
    if (*sweep_cmd) return run_sweep(g, f, s);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
