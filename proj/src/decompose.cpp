#include "specreg/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "specreg/kernels.hpp"

namespace specreg {

std::string_view to_string(Regime r) noexcept {
  return r == Regime::paper_constants ? "paper_constants" : "override";
}

std::string_view to_string(GraphType t) noexcept { return t == GraphType::type1 ? "type1" : "type2"; }

std::string_view to_string(StepCase c) noexcept {
  switch (c) {
    case StepCase::none: return "none";
    case StepCase::case1: return "case1";
    case StepCase::case2: return "case2";
    case StepCase::case3: return "case3";
  }
  return "none";
}

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::type1_extracted: return "type1_extracted";
    case Termination::below_part_count: return "below_part_count";
    case Termination::stalled: return "stalled";
    case Termination::no_edges: return "no_edges";
  }
  return "type1_extracted";
}

void DecomposeParams::validate() const {
  if (!(c > 0.0)) throw Error(ErrorKind::parameter_out_of_range, "c must be > 0");
  if (!(eps > 0.0 && eps <= 0.5)) throw Error(ErrorKind::parameter_out_of_range, "eps must lie in (0, 1/2]");
  if (p_override && *p_override < 2) throw Error(ErrorKind::parameter_out_of_range, "p override must be >= 2");
  solver.validate();
}

std::size_t DecomposeTrace::violation_count() const {
  std::size_t count = 0;
  for (const auto& s : steps) {
    count += std::count_if(s.certificates.begin(), s.certificates.end(),
                           [](const Certificate& c) { return c.violated(); });
  }
  count += std::count_if(theorem_checks.begin(), theorem_checks.end(),
                         [](const Certificate& c) { return c.violated(); });
  return count;
}

std::uint64_t paper_p(double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) throw Error(ErrorKind::parameter_out_of_range, "eps must lie in (0, 1/2]");
  constexpr long double limit = 9223372036854775808.0L;  // 2^63
  const long double e = (2.0L - 2.0L * eps) / static_cast<long double>(eps);
  const long double k = std::round(e);
  if (std::fabs(e - k) <= 1e-9L) {
    long double v = 1.0L;
    for (long double i = 0; i < k; i += 1.0L) {
      v *= 18.0L;
      if (v > limit) break;
    }
    if (v > limit) throw Error(ErrorKind::overflow, "18^" + std::to_string(static_cast<long long>(k)) + " exceeds 2^63");
    return static_cast<std::uint64_t>(v);
  }
  const long double v = std::pow(18.0L, e);
  if (!(v <= limit)) throw Error(ErrorKind::overflow, "18^" + std::to_string(static_cast<double>(e)) + " exceeds 2^63");
  return static_cast<std::uint64_t>(std::ceil(v));
}

PartitionPlan make_partition(const Graph& g, const EigenPair& pair, std::uint64_t p) {
  const std::size_t n = g.order();
  if (p < 2) throw Error(ErrorKind::parameter_out_of_range, "part count must be >= 2");
  if (n < p) {
    throw Error(ErrorKind::too_few_vertices,
                "n = " + std::to_string(n) + " is smaller than p = " + std::to_string(p));
  }
  if (pair.x.size() != n) throw Error(ErrorKind::dimension_mismatch, "eigenvector length differs from n");

  const auto& x = pair.x;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return x[a] != x[b] ? x[a] > x[b] : a < b; });

  PartitionPlan plan;
  plan.p = p;
  plan.eta = 1.0 / (static_cast<double>(p) * static_cast<double>(p));
  const std::size_t b1 = (n + p - 1) / p;
  std::vector<std::vector<Vertex>> members(p);
  plan.part_of.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    const std::uint32_t part = r < b1 ? 0 : static_cast<std::uint32_t>(1 + (r - b1) % (p - 1));
    members[part].push_back(order[r]);
    plan.part_of[order[r]] = part;
  }
  plan.b1_min_entry = x[order[b1 - 1]];
  plan.parts.reserve(p);
  plan.masses.reserve(p);
  for (auto& ids : members) {
    double mass = 0.0;
    for (Vertex v : ids) mass += x[v] * x[v];
    plan.masses.push_back(mass);
    plan.parts.push_back(VertexSet::from_unsorted(std::move(ids)));
  }
  return plan;
}

GraphType classify(const PartitionPlan& plan) {
  return plan.mass_b1() <= 0.5 - plan.eta ? GraphType::type1 : GraphType::type2;
}

namespace {

std::vector<double> restrict_vector(const std::vector<double>& x, const Subgraph& sub) {
  std::vector<double> out(sub.host_ids.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[sub.host_ids[i]];
  return out;
}

// Labels of `inner` re-expressed in the host of `outer`.
Subgraph compose(const Subgraph& outer, Subgraph inner) {
  for (auto& h : inner.host_ids) h = outer.host_ids[h];
  return inner;
}

double fp_tol(double scale) { return 1e-9 * std::max(1.0, std::fabs(scale)); }

// Residual slack plus a rounding floor; an exact eigenvector has residual 0.
double step_slack(const EigenPair& pair, std::size_t n) {
  return certificate_slack(pair.residual, n) + fp_tol(pair.lambda);
}

}  // namespace

Type1Extraction extract_type1(const Graph& g, const EigenPair& pair, const PartitionPlan& plan) {
  if (classify(plan) != GraphType::type1) throw Error(ErrorKind::wrong_type, "extract_type1 needs a type-1 plan");
  const std::size_t n = g.order();
  const double p = static_cast<double>(plan.p);
  const double eta = plan.eta;
  const double lambda = pair.lambda;
  const double slack = step_slack(pair, n);

  std::vector<Vertex> outside;
  outside.reserve(n - plan.parts[0].size());
  for (Vertex v = 0; v < n; ++v) {
    if (plan.part_of[v] != 0) outside.push_back(v);
  }
  Type1Extraction out;
  out.subgraph = induced_subgraph(g, VertexSet::from_sorted(std::move(outside)));
  const std::vector<double> xs = restrict_vector(pair.x, out.subgraph);
  out.outside_weight = kernels::edge_weight(out.subgraph.graph, xs);
  for (double e : xs) out.max_outside_entry_sq = std::max(out.max_outside_entry_sq, e * e);

  const double total_weight = kernels::edge_weight(g, pair.x);
  const std::uint64_t floor_np = n / plan.p;
  const auto e_out = static_cast<double>(out.subgraph.graph.size());
  auto& c = out.certificates;
  c.push_back(make_certificate("eigen_identity", Relation::eq, 2.0 * total_weight, lambda, slack));
  c.push_back(make_certificate("type1_mass", Relation::le, plan.mass_b1(), 0.5 - eta, 0.0));
  c.push_back(make_certificate("type1_b1_weight", Relation::le, total_weight - out.outside_weight,
                               (0.5 - eta) * lambda, slack));
  c.push_back(make_certificate("type1_outside_weight", Relation::ge, out.outside_weight, eta * lambda, slack));
  c.push_back(make_certificate("type1_entry_bound", Relation::le, out.max_outside_entry_sq,
                               (0.5 - eta) / static_cast<double>(floor_np), fp_tol(0.0) * 1e-3));
  c.push_back(make_certificate("type1_entry_bound_pn", Relation::le, out.max_outside_entry_sq,
                               p / (2.0 * static_cast<double>(n)), fp_tol(0.0) * 1e-3));
  c.push_back(make_certificate("type1_edge_count", Relation::ge, e_out,
                               2.0 * eta * lambda * static_cast<double>(n) / p, slack * static_cast<double>(n)));
  c.push_back(make_certificate("type1_order", Relation::eq, static_cast<double>(out.subgraph.graph.order()),
                               static_cast<double>((plan.p - 1) * n / plan.p), 0.0));
  return out;
}

Type2Extraction extract_type2(const Graph& g, const EigenPair& pair, const PartitionPlan& plan,
                              const DecomposeParams& params) {
  if (classify(plan) != GraphType::type2) throw Error(ErrorKind::wrong_type, "extract_type2 needs a type-2 plan");
  const std::size_t n = g.order();
  const std::uint64_t p = plan.p;
  const double sqrt_p = std::sqrt(static_cast<double>(p));
  const double lambda = pair.lambda;
  const double slack = step_slack(pair, n);
  const std::size_t b1_size = plan.parts[0].size();

  Type2Extraction out;
  DecomposeStep& s = out.step;
  s.n_before = n;
  s.m_before = g.size();
  s.lambda_before = lambda;
  s.residual_before = pair.residual;
  s.slack = slack;
  s.p = p;
  s.eta = plan.eta;
  s.mass_b1 = plan.mass_b1();
  s.b1_size = b1_size;
  s.type = GraphType::type2;

  const std::vector<double> w =
      kernels::part_weights(g, pair.x, plan.part_of, 0, static_cast<std::uint32_t>(p));
  s.f = w[0];
  double rest = 0.0;
  for (std::uint64_t i = 1; i < p; ++i) rest += plan.masses[i];
  s.alpha.resize(p - 1);
  s.beta.resize(p - 1);
  s.gamma.resize(p - 1);
  for (std::uint64_t i = 1; i < p; ++i) {
    s.beta[i - 1] = plan.masses[i];
    s.alpha[i - 1] = std::max(0.0, rest - plan.masses[i]);
    s.gamma[i - 1] = lambda > 0.0 ? w[i] / lambda : 0.0;
  }

  auto& certs = s.certificates;
  certs.push_back(make_certificate("eigen_identity", Relation::eq, 2.0 * kernels::edge_weight(g, pair.x), lambda,
                                   slack));
  certs.push_back(make_certificate("type2_mass", Relation::ge, plan.mass_b1(), 0.5 - plan.eta, 0.0));

  auto pick = [&](std::uint64_t idx) {
    s.chosen_j = idx + 2;
    s.alpha_j = s.alpha[idx];
    s.beta_j = s.beta[idx];
    s.gamma_j = s.gamma[idx];
  };

  const double case2_bound = 0.5 - 1.0 / sqrt_p;
  if (s.f >= lambda / sqrt_p) {
    s.case_tag = StepCase::case1;
    out.subgraph = induced_subgraph(g, plan.parts[0]);
    certs.push_back(make_certificate("case1_f", Relation::ge, s.f, lambda / sqrt_p, 0.0));
    certs.push_back(make_certificate("case1_rayleigh", Relation::ge, 2.0 * s.f / plan.mass_b1(), lambda / sqrt_p,
                                     slack));
  } else {
    std::optional<std::uint64_t> case2;
    for (std::uint64_t i = 0; i + 1 < p; ++i) {
      if (s.alpha[i] <= case2_bound) {
        case2 = i;
        break;
      }
    }
    if (case2) {
      s.case_tag = StepCase::case2;
      pick(*case2);
      const VertexSet& bj = plan.parts[*case2 + 1];
      std::vector<Vertex> ids(plan.parts[0].begin(), plan.parts[0].end());
      ids.insert(ids.end(), bj.begin(), bj.end());
      out.subgraph = induced_subgraph(g, VertexSet::from_unsorted(std::move(ids)));
      const double weight = kernels::edge_weight(out.subgraph.graph, restrict_vector(pair.x, out.subgraph));
      certs.push_back(make_certificate("case2_alpha", Relation::le, s.alpha_j, case2_bound, 0.0));
      certs.push_back(make_certificate("case2_outside_weight", Relation::le,
                                       kernels::edge_weight(g, pair.x) - weight, s.alpha_j * lambda, slack));
      certs.push_back(make_certificate("case2_weight", Relation::ge, weight, lambda / sqrt_p, slack));
    } else {
      s.case_tag = StepCase::case3;
      s.witness_threshold = 1.0 / (9.0 * sqrt_p);
      auto ratio = [&](std::uint64_t i) {
        return s.beta[i] > 0.0 ? s.gamma[i] / std::sqrt(3.0 * s.beta[i]) : 0.0;
      };
      std::optional<std::uint64_t> j;
      for (std::uint64_t i = 0; i + 1 < p; ++i) {
        if (s.beta[i] > 0.0 && ratio(i) > s.witness_threshold) {
          j = i;
          break;
        }
      }
      if (!j) {
        if (!params.force) {
          throw Error(ErrorKind::case3_witness_missing,
                      "no part j satisfies gamma_j / sqrt(3 beta_j) > 1/(9 sqrt p) (n = " + std::to_string(n) +
                          ", p = " + std::to_string(p) + ")");
        }
        std::uint64_t best = 0;
        for (std::uint64_t i = 1; i + 1 < p; ++i) {
          if (ratio(i) > ratio(best)) best = i;
        }
        j = best;
        s.forced_witness = true;
      }
      pick(*j);
      s.witness_ratio = ratio(*j);
      out.subgraph = bipartite_between(g, plan.parts[0], plan.parts[*j + 1]);

      std::vector<double> y = restrict_vector(pair.x, out.subgraph);
      const double weight = kernels::edge_weight(out.subgraph.graph, y);
      const double scale = s.beta_j > 0.0 ? std::sqrt((s.alpha_j + s.beta_j) / s.beta_j) : 1.0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (plan.part_of[out.subgraph.host_ids[i]] != 0) y[i] *= scale;
      }
      const double y_norm = std::sqrt(kernels::dot(y, y));
      const double rayleigh_y = 2.0 * kernels::edge_weight(out.subgraph.graph, y);
      const bool premise = s.alpha_j + s.beta_j >= 1.0 / 3.0 && !s.forced_witness;
      const double chain = s.beta_j > 0.0 ? 2.0 * s.gamma_j / std::sqrt(3.0 * s.beta_j) * lambda : 0.0;

      certs.push_back(make_certificate("case3_witness", Relation::ge, s.witness_ratio, s.witness_threshold, 0.0,
                                       !s.forced_witness));
      certs.push_back(make_certificate("case3_weight_identity", Relation::eq, weight, s.gamma_j * lambda,
                                       fp_tol(lambda)));
      certs.push_back(make_certificate("case3_unit_norm", Relation::eq, y_norm, 1.0, 1e-9));
      certs.push_back(make_certificate("case3_rayleigh_identity", Relation::eq, rayleigh_y,
                                       2.0 * scale * s.gamma_j * lambda, fp_tol(lambda)));
      certs.push_back(make_certificate("case3_rayleigh_chain", Relation::ge, rayleigh_y, chain, slack, premise));
      certs.push_back(make_certificate("case3_rayleigh_bound", Relation::ge, rayleigh_y,
                                       2.0 * lambda / (9.0 * sqrt_p), slack, premise));
    }
  }

  const std::size_t extracted = out.subgraph.graph.order();
  const double np = static_cast<double>(n) / static_cast<double>(p);
  s.n_extracted = extracted;
  s.n_after = extracted;
  s.m_after = out.subgraph.graph.size();
  if (s.case_tag == StepCase::case1) {
    certs.push_back(make_certificate("case1_order", Relation::eq, static_cast<double>(extracted),
                                     static_cast<double>(b1_size), 0.0));
  } else {
    certs.push_back(make_certificate("pair_order", Relation::le, static_cast<double>(extracted),
                                     2.0 * static_cast<double>(b1_size), 0.0));
  }
  certs.push_back(make_certificate("extract_order_lower", Relation::ge, static_cast<double>(extracted), np, 0.0));
  certs.push_back(make_certificate("extract_order_upper", Relation::le, static_cast<double>(extracted), 3.0 * np,
                                   0.0, s.case_tag == StepCase::case1 || n >= 2 * p));
  return out;
}

namespace {

double termination_bound(std::size_t n, double c, double eps, std::uint64_t p) {
  const double denom = std::log(static_cast<double>(p) / 324.0);
  if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
  return ((1.0 - 2.0 * eps) * std::log(static_cast<double>(n)) - std::log(c)) / denom;
}

void record_output(DecomposeTrace& trace, const Subgraph& out) {
  trace.final_n = out.graph.order();
  trace.final_m = out.graph.size();
  trace.final_avg_degree =
      trace.final_n > 0 ? 2.0 * static_cast<double>(trace.final_m) / static_cast<double>(trace.final_n) : 0.0;
}

}  // namespace

DecomposeResult decompose(const Graph& g, const DecomposeParams& params) {
  params.validate();
  if (g.size() == 0) throw Error(ErrorKind::no_edges, "input graph has no edges");
  const std::size_t n = g.order();
  const std::uint64_t p = params.p_override ? *params.p_override : paper_p(params.eps);
  const double sqrt_p = std::sqrt(static_cast<double>(p));

  DecomposeTrace trace;
  trace.regime = params.regime();
  trace.p = p;
  trace.eta = 1.0 / (static_cast<double>(p) * static_cast<double>(p));
  trace.c = params.c;
  trace.eps = params.eps;
  trace.n_input = n;
  trace.m_input = g.size();
  trace.termination_bound = termination_bound(n, params.c, params.eps, p);

  EigenPair pair = dominant_eigenpair(g, params.solver);
  trace.hypothesis.lambda = pair.lambda;
  trace.hypothesis.residual = pair.residual;
  trace.hypothesis.threshold = params.c * std::pow(static_cast<double>(n), 0.5 + params.eps);
  trace.hypothesis.met = pair.lambda >= trace.hypothesis.threshold;
  if (!trace.hypothesis.met) {
    if (!params.force) {
      throw Error(ErrorKind::hypothesis_not_met, "lambda = " + std::to_string(pair.lambda) + " < c n^{1/2+eps} = " +
                                                     std::to_string(trace.hypothesis.threshold));
    }
    trace.warnings.push_back("hypothesis lambda >= c n^{1/2+eps} not met; continuing (force)");
  }
  if (trace.regime == Regime::override_p) {
    trace.warnings.push_back("part count overridden: non-theorem regime, guarantees reported only");
  }
  const bool theorem_regime = trace.regime == Regime::paper_constants && trace.hypothesis.met;

  Subgraph current{g, identity_map(n)};
  Subgraph output;
  bool done = false;
  for (std::uint64_t index = 0; !done; ++index) {
    const std::size_t cur_n = current.graph.order();
    if (cur_n < p) {
      trace.termination = Termination::below_part_count;
      trace.warnings.push_back("current graph has " + std::to_string(cur_n) + " < p = " + std::to_string(p) +
                               " vertices: below part-count scale");
      output = current;
      break;
    }
    const PartitionPlan plan = make_partition(current.graph, pair, p);

    if (classify(plan) == GraphType::type1) {
      Type1Extraction ext = extract_type1(current.graph, pair, plan);
      DecomposeStep step;
      step.index = index;
      step.n_before = cur_n;
      step.m_before = current.graph.size();
      step.lambda_before = pair.lambda;
      step.residual_before = pair.residual;
      step.slack = step_slack(pair, cur_n);
      step.p = p;
      step.eta = plan.eta;
      step.mass_b1 = plan.mass_b1();
      step.b1_size = plan.parts[0].size();
      step.type = GraphType::type1;
      step.n_extracted = ext.subgraph.graph.order();
      step.n_after = step.n_extracted;
      step.m_after = ext.subgraph.graph.size();
      step.certificates = std::move(ext.certificates);
      output = compose(current, std::move(ext.subgraph));
      step.kept = output.host_ids;
      trace.steps.push_back(std::move(step));
      trace.termination = Termination::type1_extracted;
      done = true;
      break;
    }

    Type2Extraction ext = extract_type2(current.graph, pair, plan, params);
    DecomposeStep& step = ext.step;
    step.index = index;
    if (step.forced_witness) {
      trace.warnings.push_back("step " + std::to_string(index) +
                               ": Case-3 witness missing; took the part maximizing gamma_j/sqrt(3 beta_j) (force)");
    }
    Subgraph next = compose(current, std::move(ext.subgraph));
    if (trace.regime == Regime::override_p) {
      const VertexSet active = non_isolated(next.graph);
      if (active.size() < next.graph.order()) next = compose(next, induced_subgraph(next.graph, active));
    }
    step.n_after = next.graph.order();
    step.m_after = next.graph.size();
    step.kept = next.host_ids;

    if (step.n_after >= cur_n) {
      step.applied = false;
      trace.steps.push_back(std::move(step));
      trace.termination = Termination::stalled;
      trace.warnings.push_back("step " + std::to_string(index) + ": extraction does not shrink the graph (n = " +
                               std::to_string(cur_n) + ", p = " + std::to_string(p) + "); stopping");
      output = current;
      break;
    }

    ++trace.k;
    std::optional<EigenPair> next_pair;
    double lambda_next = 0.0;
    double slack_next = 0.0;
    if (next.graph.size() > 0) {
      next_pair = dominant_eigenpair(next.graph, params.solver);
      lambda_next = next_pair->lambda;
      slack_next = step_slack(*next_pair, next.graph.order());
      step.lambda_after = lambda_next;
      step.residual_after = next_pair->residual;
    } else {
      step.lambda_after = 0.0;
      step.residual_after = 0.0;
    }
    const bool descent_premise =
        step.case_tag != StepCase::case3 || (step.alpha_j + step.beta_j >= 1.0 / 3.0 && !step.forced_witness);
    step.certificates.push_back(make_certificate("lambda_descent", Relation::ge, lambda_next,
                                                 step.lambda_before / (6.0 * sqrt_p), step.slack + slack_next,
                                                 descent_premise));
    step.certificates.push_back(make_certificate(
        "hypothesis_kept", Relation::ge, lambda_next,
        params.c * std::pow(static_cast<double>(step.n_after), 0.5 + params.eps), step.slack + slack_next,
        theorem_regime));
    trace.steps.push_back(std::move(step));

    current = std::move(next);
    if (!next_pair) {
      trace.termination = Termination::no_edges;
      trace.warnings.push_back("iterate has no edges after step " + std::to_string(index));
      output = current;
      break;
    }
    pair = std::move(*next_pair);
  }

  record_output(trace, output);
  const bool enforce = theorem_regime && trace.termination == Termination::type1_extracted;
  const double n_prime = static_cast<double>(trace.final_n);
  const double p3 = std::pow(static_cast<double>(p), 3.0);
  trace.theorem_checks.push_back(make_certificate("order_floor", Relation::ge, n_prime,
                                                  std::pow(static_cast<double>(n), params.eps / 3.0), 0.0, enforce));
  trace.theorem_checks.push_back(make_certificate("density_floor", Relation::ge, trace.final_avg_degree,
                                                  4.0 * params.c / p3 * std::pow(n_prime, 0.5 + params.eps), 0.0,
                                                  enforce));
  trace.theorem_checks.push_back(make_certificate("iteration_bound", Relation::le, static_cast<double>(trace.k),
                                                  trace.termination_bound, 0.0, enforce));
  if (theorem_regime && !enforce) {
    trace.warnings.push_back("no type-1 graph reached; order/density guarantees not evaluated");
  }
  return {std::move(output), std::move(trace)};
}

}  // namespace specreg
