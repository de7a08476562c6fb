#include "specreg/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "specreg/kernels.hpp"

namespace specreg {

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorKind::parameter_out_of_range, "solver tol must be > 0");
  if (max_iterations < 1) throw Error(ErrorKind::parameter_out_of_range, "solver max_iterations must be >= 1");
  if (!(shift >= 0.0)) throw Error(ErrorKind::parameter_out_of_range, "solver shift must be >= 0");
}

namespace {

struct ComponentSolve {
  double lambda = 0.0;
  std::vector<double> x;
  double residual = std::numeric_limits<double>::infinity();
  std::uint64_t iterations = 0;
  bool converged = false;
};

void normalize(std::vector<double>& v) {
  const double norm = std::sqrt(kernels::dot(v, v));
  for (double& e : v) e /= norm;
}

ComponentSolve power_iterate(const Graph& h, const SolverConfig& cfg) {
  const std::size_t n = h.order();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n);
  ComponentSolve best;
  for (std::uint64_t it = 1;; ++it) {
    const kernels::RayleighResidual rr = kernels::rayleigh_residual(h, x);
    if (rr.residual < best.residual) {
      best.lambda = rr.lambda;
      best.x = x;
      best.residual = rr.residual;
    }
    best.iterations = it;
    if (rr.residual <= cfg.tol) {
      best.converged = true;
      return best;
    }
    if (it >= cfg.max_iterations) return best;
    // an offset near lambda/2 damps the -lambda partner of bipartite graphs
    const double shift = std::max(cfg.shift, rr.lambda / 2.0);
    kernels::spmv(h, x, ax);
    for (std::size_t i = 0; i < n; ++i) x[i] = ax[i] + shift * x[i];
    normalize(x);
  }
}

EigenPair scatter(const ComponentSolve& s, const VertexSet& comp, std::size_t n) {
  EigenPair p;
  p.lambda = s.lambda;
  p.residual = s.residual;
  p.iterations = s.iterations;
  p.component = comp;
  p.x.assign(n, 0.0);
  for (std::size_t i = 0; i < comp.size(); ++i) p.x[comp[i]] = s.x[i];
  return p;
}

}  // namespace

EigenPair dominant_eigenpair(const Graph& g, const SolverConfig& cfg) {
  cfg.validate();
  if (g.size() == 0) throw Error(ErrorKind::no_edges, "graph has no edges; lambda = 0");
  const std::size_t n = g.order();

  std::optional<EigenPair> best;
  for (const VertexSet& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    std::size_t comp_max_degree = 0;
    for (Vertex v : comp) comp_max_degree = std::max(comp_max_degree, g.degree(v));
    // lambda(component) <= its max degree
    if (best && static_cast<double>(comp_max_degree) <= best->lambda + cfg.tol) continue;

    ComponentSolve solve;
    if (comp.size() == n) {
      solve = power_iterate(g, cfg);
    } else {
      solve = power_iterate(induced_subgraph(g, comp).graph, cfg);
    }
    if (!solve.converged) {
      throw NotConvergedError("residual " + std::to_string(solve.residual) + " > tol after " +
                                  std::to_string(solve.iterations) + " iterations",
                              scatter(solve, comp, n));
    }
    if (!best || solve.lambda > best->lambda + cfg.tol) best = scatter(solve, comp, n);
  }
  return std::move(*best);
}

double rayleigh(const Graph& g, std::span<const double> x) {
  if (x.size() != g.order()) {
    throw Error(ErrorKind::dimension_mismatch,
                "vector length " + std::to_string(x.size()) + " vs n = " + std::to_string(g.order()));
  }
  const double norm = std::sqrt(kernels::dot(x, x));
  if (std::fabs(norm - 1.0) > 1e-9) throw Error(ErrorKind::not_unit, "||x|| = " + std::to_string(norm));
  return 2.0 * kernels::edge_weight(g, x);
}

double exact_spectral_radius_small(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 64) throw Error(ErrorKind::too_large, "dense oracle supports n <= 64, got " + std::to_string(n));
  if (n == 0) return 0.0;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const Edge& e : g.edge_list()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

}  // namespace specreg
