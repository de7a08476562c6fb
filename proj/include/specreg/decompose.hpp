#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specreg/certificate.hpp"
#include "specreg/graph.hpp"
#include "specreg/spectral.hpp"

namespace specreg {

/// Dense-subgraph extraction driven by the Perron vector's mass distribution.
///
/// Each round partitions the current graph into p near-equal parts ordered by
/// eigenvector entry (B_1 holds the top ceil(n/p) entries) and classifies it:
///
///   type 1   mass(B_1) <= 1/2 - 1/p^2   output G \ B_1 and stop
///   type 2   otherwise                  shrink to G[B_1], G[B_1 u B_j] or the
///                                       crossing graph G(B_1, B_j) and repeat
///
/// Every inequality the argument relies on is evaluated on the computed
/// eigenpair and recorded as a Certificate with slack 2 * residual * sqrt(n)
/// plus a rounding floor of 1e-9 * max(1, lambda).

enum class Regime { paper_constants, override_p };
enum class GraphType { type1, type2 };
enum class StepCase { none, case1, case2, case3 };
enum class Termination { type1_extracted, below_part_count, stalled, no_edges };

std::string_view to_string(Regime r) noexcept;
std::string_view to_string(GraphType t) noexcept;
std::string_view to_string(StepCase c) noexcept;
std::string_view to_string(Termination t) noexcept;

struct DecomposeParams {
  double c = 1.0;
  /// epsilon in (0, 1/2]; the hypothesis is lambda >= c n^{1/2 + eps}.
  double eps = 0.5;
  /// Part count replacing ceil(18^{(2 - 2 eps)/eps}); >= 2.
  std::optional<std::uint64_t> p_override;
  /// Continue when the hypothesis fails or no Case-3 witness exists.
  bool force = false;
  SolverConfig solver;

  void validate() const;
  Regime regime() const noexcept { return p_override ? Regime::override_p : Regime::paper_constants; }
};

struct PartitionPlan {
  std::uint64_t p = 0;
  double eta = 0.0;
  /// parts[0] is B_1.
  std::vector<VertexSet> parts;
  std::vector<double> masses;
  double b1_min_entry = 0.0;
  /// Vertex -> 0-based part index.
  std::vector<std::uint32_t> part_of;

  double mass_b1() const { return masses.front(); }
};

/// ceil(18^{(2 - 2 eps)/eps}); throws Overflow above 2^63.
std::uint64_t paper_p(double eps);

/// B_1 = top ceil(n/p) entries (ties: smaller id); the rest is dealt to
/// B_2..B_p round-robin in descending-entry order. Throws TooFewVertices for n < p.
PartitionPlan make_partition(const Graph& g, const EigenPair& pair, std::uint64_t p);

GraphType classify(const PartitionPlan& plan);

struct Type1Extraction {
  Subgraph subgraph;
  double outside_weight = 0.0;
  double max_outside_entry_sq = 0.0;
  std::vector<Certificate> certificates;
};

/// G \ B_1 with its certificates. Throws WrongType on a type-2 plan.
Type1Extraction extract_type1(const Graph& g, const EigenPair& pair, const PartitionPlan& plan);

struct DecomposeStep {
  std::uint64_t index = 0;
  std::size_t n_before = 0;
  std::uint64_t m_before = 0;
  double lambda_before = 0.0;
  double residual_before = 0.0;
  double slack = 0.0;
  std::uint64_t p = 0;
  double eta = 0.0;
  double mass_b1 = 0.0;
  std::size_t b1_size = 0;
  GraphType type = GraphType::type1;
  StepCase case_tag = StepCase::none;
  double f = 0.0;
  /// 1-based part label of B_j (B_1 is part 1); 0 when unused.
  std::uint64_t chosen_j = 0;
  double alpha_j = 0.0;
  double beta_j = 0.0;
  double gamma_j = 0.0;
  /// Per-part values for parts 2..p (index i - 2).
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> gamma;
  double witness_ratio = 0.0;
  double witness_threshold = 0.0;
  bool forced_witness = false;
  /// Order of the extracted subgraph before any isolated-vertex trimming.
  std::size_t n_extracted = 0;
  std::size_t n_after = 0;
  std::uint64_t m_after = 0;
  /// Eigenpair of the next iterate, when it has edges.
  std::optional<double> lambda_after;
  std::optional<double> residual_after;
  /// False for a recorded extraction that did not shrink the graph.
  bool applied = true;
  std::vector<Certificate> certificates;
  /// Output vertices of this step in input-graph labels.
  std::vector<Vertex> kept;
};

struct Type2Extraction {
  Subgraph subgraph;
  DecomposeStep step;
};

/// Case 1: G[B_1]; Case 2: G[B_1 u B_j]; Case 3: G(B_1, B_j). Throws WrongType
/// on a type-1 plan and Case3WitnessMissing when no part satisfies the Case-3
/// witness inequality and force is off.
Type2Extraction extract_type2(const Graph& g, const EigenPair& pair, const PartitionPlan& plan,
                              const DecomposeParams& params);

struct HypothesisCheck {
  double lambda = 0.0;
  double residual = 0.0;
  double threshold = 0.0;
  bool met = false;
};

struct DecomposeTrace {
  Regime regime = Regime::paper_constants;
  std::uint64_t p = 0;
  double eta = 0.0;
  double c = 0.0;
  double eps = 0.0;
  std::size_t n_input = 0;
  std::uint64_t m_input = 0;
  HypothesisCheck hypothesis;
  std::vector<DecomposeStep> steps;
  /// Applied type-2 steps.
  std::uint64_t k = 0;
  Termination termination = Termination::type1_extracted;
  std::size_t final_n = 0;
  std::uint64_t final_m = 0;
  double final_avg_degree = 0.0;
  /// ((1 - 2 eps) log n - log c) / log(p / 324); +inf when vacuous.
  double termination_bound = 0.0;
  /// Order, density and iteration-count guarantees; enforced only under
  /// default part count with the hypothesis met.
  std::vector<Certificate> theorem_checks;
  std::vector<std::string> warnings;

  std::size_t violation_count() const;
};

struct DecomposeResult {
  /// Final subgraph; host_ids are input-graph labels.
  Subgraph output;
  DecomposeTrace trace;
};

/// Throws NoEdges, HypothesisNotMet (unless force), Overflow (default p),
/// Case3WitnessMissing (unless force), NotConverged.
DecomposeResult decompose(const Graph& g, const DecomposeParams& params);

}  // namespace specreg
