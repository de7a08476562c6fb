#include "specreg/sweep.hpp"

#include <sstream>

#include "specreg/kernels.hpp"
#include "specreg/pipeline.hpp"
#include "specreg/report.hpp"

namespace specreg {

void SweepSpec::validate() const {
  if (n_values.empty() || eps_values.empty() || c_values.empty()) {
    throw Error(ErrorKind::parameter_out_of_range, "sweep ranges over n, eps and c must be non-empty");
  }
  if (repetitions < 1) throw Error(ErrorKind::parameter_out_of_range, "sweep repetitions must be >= 1");
  for (double eps : eps_values) {
    if (!(eps > 0.0 && eps <= 0.5)) throw Error(ErrorKind::parameter_out_of_range, "sweep eps must lie in (0, 1/2]");
  }
  for (double c : c_values) {
    if (!(c > 0.0)) throw Error(ErrorKind::parameter_out_of_range, "sweep c must be > 0");
  }
  regularize.validate();
  solver.validate();
}

std::size_t SweepSpec::cell_count() const noexcept {
  return n_values.size() * eps_values.size() * c_values.size() * repetitions;
}

namespace {

SweepRow run_cell(const SweepSpec& spec, std::size_t cell) {
  const std::size_t reps = spec.repetitions;
  const std::size_t nc = spec.c_values.size();
  const std::size_t ne = spec.eps_values.size();
  SweepRow row;
  row.cell = cell;
  row.rep = cell % reps;
  row.c = spec.c_values[(cell / reps) % nc];
  row.eps = spec.eps_values[(cell / reps / nc) % ne];
  row.n = spec.n_values[cell / reps / nc / ne];
  row.seed = spec.seed_base + cell;
  row.family = std::string(to_string(spec.generator.family));

  try {
    GenSpec gen = spec.generator;
    gen.n = row.n;
    gen.seed = row.seed;
    const Graph g = generate(gen);
    row.input_m = g.size();

    DecomposeParams params;
    params.c = row.c;
    params.eps = row.eps;
    params.p_override = spec.p_override;
    params.force = spec.force;
    params.solver = spec.solver;
    const PipelineResult r = run_pipeline(g, params, spec.regularize);
    const PipelineReport& p = r.report;
    row.lambda = p.lambda;
    row.hypothesis_met = p.decompose.hypothesis.met;
    row.k = p.decompose.k;
    row.termination = std::string(to_string(p.decompose.termination));
    row.decompose_n = p.decompose.final_n;
    row.n_prime = p.regularity.n_prime;
    row.e_prime = p.regularity.e_prime;
    row.K_achieved = p.regularity.K_achieved;
    row.c_prime = p.regularity.c_prime_achieved;
    row.order_pass = p.theorem_1_5.order_passed;
    row.density_pass = p.theorem_1_5.density_passed;
    row.enforced = p.theorem_1_5.enforced;
    row.violations = p.violation_count();
  } catch (const Error& e) {
    row.status = std::string(to_string(e.kind()));
    row.error = e.what();
  } catch (const std::exception& e) {
    row.status = "internal";
    row.error = e.what();
  }
  return row;
}

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

template <class T>
std::string cell_of(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, double>) {
    return report::format_number(*v);
  } else if constexpr (std::is_same_v<T, bool>) {
    return *v ? "1" : "0";
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  spec.validate();
  const auto cells = static_cast<std::int64_t>(spec.cell_count());
  std::vector<SweepRow> rows(static_cast<std::size_t>(cells));
#pragma omp parallel for schedule(dynamic) num_threads(kernels::thread_count())
  for (std::int64_t i = 0; i < cells; ++i) rows[static_cast<std::size_t>(i)] = run_cell(spec, static_cast<std::size_t>(i));
  return rows;
}

const char* const kSweepColumns =
    "cell,family,n,eps,c,rep,seed,status,error,input_m,lambda,hypothesis_met,k,termination,decompose_n,n_prime,"
    "e_prime,K_achieved,c_prime,order_pass,density_pass,enforced,violations";

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepColumns << '\n';
  for (const SweepRow& r : rows) {
    out << r.cell << ',' << r.family << ',' << r.n << ',' << report::format_number(r.eps) << ','
        << report::format_number(r.c) << ',' << r.rep << ',' << r.seed << ',' << r.status << ',' << quoted(r.error)
        << ',' << r.input_m << ',' << cell_of(r.lambda) << ',' << cell_of(r.hypothesis_met) << ',' << cell_of(r.k)
        << ',' << r.termination << ',' << cell_of(r.decompose_n) << ',' << cell_of(r.n_prime) << ','
        << cell_of(r.e_prime) << ',' << cell_of(r.K_achieved) << ',' << cell_of(r.c_prime) << ','
        << cell_of(r.order_pass) << ',' << cell_of(r.density_pass) << ',' << cell_of(r.enforced) << ','
        << r.violations << '\n';
  }
  return out.str();
}

}  // namespace specreg
