#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "specreg/graph.hpp"

namespace specreg {

struct SolverConfig {
  /// Residual tolerance on ||Ax - lambda x||_2.
  double tol = 1e-10;
  std::uint64_t max_iterations = 100000;
  /// Lower bound on the diagonal offset: iterations run on A + s I with
  /// s = max(shift, lambda_estimate / 2).
  double shift = 1.0;

  void validate() const;
};

/// Perron pair of the dominant component.
struct EigenPair {
  /// Rayleigh quotient x^T A x at return.
  double lambda = 0.0;
  /// Unit, nonnegative, zero outside `component`.
  std::vector<double> x;
  double residual = 0.0;
  std::uint64_t iterations = 0;
  VertexSet component;
};

class NotConvergedError : public Error {
 public:
  NotConvergedError(const std::string& what, EigenPair best)
      : Error(ErrorKind::not_converged, what), best_(std::move(best)) {}
  const EigenPair& best() const noexcept { return best_; }

 private:
  EigenPair best_;
};

/// Shifted power iteration per connected component, started from the all-ones
/// direction; returns the component with the largest lambda (ties: smallest
/// minimum vertex id). Throws NoEdges when m = 0 and NotConvergedError when a
/// component misses `cfg.tol` within `cfg.max_iterations`.
EigenPair dominant_eigenpair(const Graph& g, const SolverConfig& cfg = {});

/// 2 * sum over edges of x_u x_v. Requires |x| = n and | ||x|| - 1 | <= 1e-9.
double rayleigh(const Graph& g, std::span<const double> x);

/// Dense symmetric eigensolve, n <= 64. Independent of the power iteration.
double exact_spectral_radius_small(const Graph& g);

/// Numerical slack for proof inequalities: 2 * residual * sqrt(n).
inline double certificate_slack(double residual, std::size_t n) {
  return 2.0 * residual * std::sqrt(static_cast<double>(n));
}

}  // namespace specreg
