#include "specreg/pipeline.hpp"

#include <algorithm>
#include <cmath>

namespace specreg {

std::string_view to_string(Stage s) noexcept { return s == Stage::decompose ? "decompose" : "regularize"; }

std::size_t PipelineReport::violation_count() const {
  return decompose.violation_count() + regularity.violation_count() + (theorem_1_5.violated() ? 1 : 0);
}

PipelineResult run_pipeline(const Graph& g, const DecomposeParams& params, RegularizeParams reg) {
  DecomposeResult dec;
  try {
    dec = decompose(g, params);
  } catch (const Error& e) {
    throw StageError(Stage::decompose, e);
  }
  reg.eps = 0.5 + params.eps;
  RegularizeResult regd;
  try {
    regd = almost_regularize(dec.output.graph, reg);
  } catch (const Error& e) {
    throw StageError(Stage::regularize, e);
  }

  PipelineResult out;
  out.output = std::move(regd.output);
  for (auto& h : out.output.host_ids) h = dec.output.host_ids[h];

  PipelineReport& r = out.report;
  r.n = g.order();
  r.m = g.size();
  r.lambda = dec.trace.hypothesis.lambda;
  r.residual = dec.trace.hypothesis.residual;
  r.regime = dec.trace.regime;

  Theorem15Check& t = r.theorem_1_5;
  t.exponent = (2.0 * params.eps * params.eps + params.eps) / 24.0;
  t.n_floor = std::pow(static_cast<double>(r.n), t.exponent);
  t.order_passed = static_cast<double>(regd.report.n_prime) >= t.n_floor;
  t.c_prime = regd.report.c_prime_achieved;
  const double target = t.c_prime * std::pow(static_cast<double>(regd.report.n_prime), 1.5 + params.eps);
  t.density_passed = t.c_prime > 0.0 && static_cast<double>(regd.report.e_prime) >= target * (1.0 - 1e-12);
  t.enforced = dec.trace.regime == Regime::paper_constants && dec.trace.hypothesis.met &&
               dec.trace.termination == Termination::type1_extracted;

  r.decompose = std::move(dec.trace);
  r.regularity = std::move(regd.report);
  return out;
}

std::size_t AuditRecord::violation_count() const {
  std::size_t v = 0;
  for (bool ok : {min_le_avg, avg_le_lambda, lambda_le_max, regularity_consistent, lambda_ge_density}) {
    if (!ok) ++v;
  }
  return v;
}

AuditRecord audit(const Graph& g, const SolverConfig& cfg, std::optional<double> eps) {
  AuditRecord a;
  const DegreeStats stats = degree_stats(g);
  a.n = g.order();
  a.m = g.size();
  a.delta_min = stats.delta_min;
  a.delta_max = stats.delta_max;
  a.d_avg = stats.d_avg;
  if (g.size() > 0) {
    const EigenPair pair = dominant_eigenpair(g, cfg);
    a.lambda = pair.lambda;
    a.residual = pair.residual;
  }
  const double dmin = static_cast<double>(a.delta_min);
  const double dmax = static_cast<double>(a.delta_max);
  a.eq_tol = 1e-8 * std::max(1.0, dmax) + a.residual;
  a.min_le_avg = dmin <= a.d_avg;
  a.avg_le_lambda = a.d_avg <= a.lambda + a.eq_tol;
  a.lambda_le_max = a.lambda <= dmax + a.eq_tol;
  a.eq_min_avg = std::fabs(a.d_avg - dmin) <= a.eq_tol;
  a.eq_avg_lambda = std::fabs(a.lambda - a.d_avg) <= a.eq_tol;
  a.eq_lambda_max = std::fabs(dmax - a.lambda) <= a.eq_tol;
  a.regular = a.delta_min == a.delta_max;
  a.regularity_consistent = a.eq_avg_lambda == a.regular && (!a.regular || a.eq_lambda_max);
  a.lambda_ge_density = a.lambda >= 2.0 * static_cast<double>(a.m) / static_cast<double>(a.n) - a.eq_tol;
  if (eps) {
    a.eps = eps;
    a.lambda_ge_half_threshold = a.lambda >= 0.5 * std::pow(static_cast<double>(a.n), 0.5 + *eps);
  }
  return a;
}

}  // namespace specreg
