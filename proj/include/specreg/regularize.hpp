#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specreg/certificate.hpp"
#include "specreg/graph.hpp"

namespace specreg {

/// Dyadic-bucket selection followed by threshold peeling.
///
/// A round buckets vertices by floor(log2 deg), keeps the single bucket or
/// bucket pair whose induced subgraph has the most edges, then repeatedly
/// removes every vertex whose degree is below theta times the current average
/// degree. Rounds repeat until Delta <= K_target * delta, nothing changes, or
/// max_rounds is reached.

struct DegreeBucket {
  unsigned index = 0;
  VertexSet vertices;
};

/// Non-empty classes D_i = {v : 2^i <= deg v < 2^{i+1}}, ascending i. Throws NoEdges.
std::vector<DegreeBucket> degree_buckets(const Graph& g);

struct RegularizeParams {
  /// Density exponent in (0, 1]; used for c_prime_achieved = e'/n'^{1+eps}.
  double eps = 0.5;
  double c = 1.0;
  double K_target = 64.0;
  double theta = 0.5;
  /// 0 selects 10 * ceil(log2 n).
  std::uint64_t max_rounds = 0;
  /// The run is flagged as passing when c_prime_achieved exceeds this floor.
  double c_prime_floor = 0.0;

  void validate() const;
};

struct RegularityReport {
  std::size_t n_input = 0;
  std::uint64_t m_input = 0;
  /// e >= c n^{1+eps} on the input.
  bool hypothesis_met = false;
  std::size_t n_prime = 0;
  std::uint64_t e_prime = 0;
  std::size_t delta_max = 0;
  std::size_t delta_min = 0;
  /// Delta / delta; +inf when delta = 0.
  double K_achieved = 0.0;
  double c_prime_achieved = 0.0;
  bool density_pass = false;
  bool target_met = false;
  bool collapsed = false;
  std::uint64_t rounds = 0;
  /// Chosen (i, j) per round; i == j for a single bucket.
  std::vector<std::pair<unsigned, unsigned>> bucket_path;
  std::vector<Certificate> checks;

  std::size_t violation_count() const;
};

struct RegularizeResult {
  /// host_ids refer to the input graph.
  Subgraph output;
  RegularityReport report;
};

/// Throws NoEdges. A run whose peeling empties the edge set returns the last
/// intermediate that still had edges with report.collapsed set.
RegularizeResult almost_regularize(const Graph& g, const RegularizeParams& params = {});

struct RegularityWitness {
  bool holds = true;
  /// Vertices of maximum and minimum degree (smallest id on ties); empty graph: none.
  std::optional<Vertex> argmax;
  std::optional<Vertex> argmin;
};

/// Delta(G) <= K delta(G).
RegularityWitness verify_almost_regular(const Graph& g, double K);

}  // namespace specreg
