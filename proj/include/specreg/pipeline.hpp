#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specreg/decompose.hpp"
#include "specreg/regularize.hpp"
#include "specreg/spectral.hpp"

namespace specreg {

enum class Stage { decompose, regularize };

std::string_view to_string(Stage s) noexcept;

/// Error raised inside one pipeline stage; kind() is the original kind.
class StageError : public Error {
 public:
  StageError(Stage stage, const Error& inner)
      : Error(inner.kind(), std::string(to_string(stage)) + " stage: " + inner.message()), stage_(stage) {}
  Stage stage() const noexcept { return stage_; }

 private:
  Stage stage_;
};

struct Theorem15Check {
  double exponent = 0.0;
  /// n^{(2 eps^2 + eps)/24}
  double n_floor = 0.0;
  bool order_passed = false;
  double c_prime = 0.0;
  /// e' >= c' n'^{3/2 + eps} with c' > 0
  bool density_passed = false;
  /// Default part count with the hypothesis met; otherwise the flags are reported only.
  bool enforced = false;

  bool violated() const noexcept { return enforced && !(order_passed && density_passed); }
};

struct PipelineReport {
  std::size_t n = 0;
  std::uint64_t m = 0;
  double lambda = 0.0;
  double residual = 0.0;
  Regime regime = Regime::paper_constants;
  DecomposeTrace decompose;
  RegularityReport regularity;
  Theorem15Check theorem_1_5;

  std::size_t violation_count() const;
};

struct PipelineResult {
  /// host_ids refer to the input graph.
  Subgraph output;
  PipelineReport report;
};

/// Decompose, then regularize the dense part with exponent 1/2 + eps.
/// Errors are rethrown as StageError.
PipelineResult run_pipeline(const Graph& g, const DecomposeParams& params, RegularizeParams reg = {});

struct AuditRecord {
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::size_t delta_min = 0;
  double d_avg = 0.0;
  double lambda = 0.0;
  double residual = 0.0;
  std::size_t delta_max = 0;
  double eq_tol = 0.0;
  bool min_le_avg = true;
  bool avg_le_lambda = true;
  bool lambda_le_max = true;
  bool eq_min_avg = false;
  bool eq_avg_lambda = false;
  bool eq_lambda_max = false;
  bool regular = false;
  /// d = lambda only for regular graphs; a regular graph has lambda = Delta.
  bool regularity_consistent = true;
  /// lambda >= 2e/n
  bool lambda_ge_density = true;
  /// Present when an eps was supplied: lambda >= n^{1/2+eps}/2.
  std::optional<double> eps;
  std::optional<bool> lambda_ge_half_threshold;

  std::size_t violation_count() const;
};

/// Degree/spectral sandwich delta <= 2m/n <= lambda <= Delta with equality flags.
/// Edgeless graphs are audited with lambda = 0.
AuditRecord audit(const Graph& g, const SolverConfig& cfg = {}, std::optional<double> eps = std::nullopt);

}  // namespace specreg
