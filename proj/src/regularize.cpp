#include "specreg/regularize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace specreg {

namespace {

unsigned floor_log2(std::uint64_t v) { return static_cast<unsigned>(std::bit_width(v) - 1); }

unsigned ceil_log2(std::uint64_t v) { return v <= 1 ? 0u : static_cast<unsigned>(std::bit_width(v - 1)); }

Subgraph compose(const Subgraph& outer, Subgraph inner) {
  for (auto& h : inner.host_ids) h = outer.host_ids[h];
  return inner;
}

std::string tagged(const char* name, std::uint64_t round) {
  return std::string(name) + "[" + std::to_string(round) + "]";
}

double average_degree(const Graph& g) {
  return g.order() == 0 ? 0.0 : 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
}

// Simultaneous passes: drop every vertex with degree < theta * average until none qualifies.
Subgraph peel(const Graph& g, double theta) {
  Subgraph cur{g, identity_map(g.order())};
  for (;;) {
    const double threshold = theta * average_degree(cur.graph);
    std::vector<Vertex> keep;
    keep.reserve(cur.graph.order());
    for (Vertex v = 0; v < cur.graph.order(); ++v) {
      if (static_cast<double>(cur.graph.degree(v)) >= threshold) keep.push_back(v);
    }
    if (keep.size() == cur.graph.order()) return cur;
    cur = compose(cur, induced_subgraph(cur.graph, VertexSet::from_sorted(std::move(keep))));
  }
}

}  // namespace

void RegularizeParams::validate() const {
  if (!(eps > 0.0 && eps <= 1.0)) throw Error(ErrorKind::parameter_out_of_range, "regularize eps must lie in (0, 1]");
  if (!(c > 0.0)) throw Error(ErrorKind::parameter_out_of_range, "regularize c must be > 0");
  if (!(K_target >= 2.0)) throw Error(ErrorKind::parameter_out_of_range, "K_target must be >= 2");
  if (!(theta > 0.0 && theta < 1.0)) throw Error(ErrorKind::parameter_out_of_range, "theta must lie in (0, 1)");
}

std::size_t RegularityReport::violation_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Certificate& c) { return c.violated(); }));
}

std::vector<DegreeBucket> degree_buckets(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorKind::no_edges, "degree buckets need at least one edge");
  std::vector<std::vector<Vertex>> by_class(64);
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    if (d > 0) by_class[floor_log2(d)].push_back(v);
  }
  std::vector<DegreeBucket> out;
  for (unsigned i = 0; i < by_class.size(); ++i) {
    if (!by_class[i].empty()) out.push_back({i, VertexSet::from_sorted(std::move(by_class[i]))});
  }
  return out;
}

RegularityWitness verify_almost_regular(const Graph& g, double K) {
  RegularityWitness w;
  if (g.order() == 0) return w;
  Vertex hi = 0;
  Vertex lo = 0;
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) > g.degree(hi)) hi = v;
    if (g.degree(v) < g.degree(lo)) lo = v;
  }
  w.argmax = hi;
  w.argmin = lo;
  // Delta / delta <= K rather than Delta <= K delta, so a run always passes
  // with its own K_achieved = fl(Delta / delta)
  const std::size_t dmin = g.degree(lo);
  const std::size_t dmax = g.degree(hi);
  w.holds = dmin == 0 ? dmax == 0 : static_cast<double>(dmax) / static_cast<double>(dmin) <= K;
  return w;
}

RegularizeResult almost_regularize(const Graph& g, const RegularizeParams& params) {
  params.validate();
  if (g.size() == 0) throw Error(ErrorKind::no_edges, "input graph has no edges");
  const std::size_t n = g.order();
  const std::uint64_t max_rounds =
      params.max_rounds > 0 ? params.max_rounds : std::max<std::uint64_t>(1, 10 * ceil_log2(n));

  RegularityReport report;
  report.n_input = n;
  report.m_input = g.size();
  report.hypothesis_met =
      static_cast<double>(g.size()) >= params.c * std::pow(static_cast<double>(n), 1.0 + params.eps);

  Subgraph cur{g, identity_map(n)};
  for (std::uint64_t round = 1; round <= max_rounds; ++round) {
    const std::uint64_t m = cur.graph.size();
    const std::vector<DegreeBucket> buckets = degree_buckets(cur.graph);
    const std::size_t b = buckets.size();
    std::vector<int> bucket_of(cur.graph.order(), -1);
    for (std::size_t k = 0; k < b; ++k) {
      for (Vertex v : buckets[k].vertices) bucket_of[v] = static_cast<int>(k);
    }
    std::vector<std::uint64_t> count(b * b, 0);
    std::size_t max_degree = 0;
    for (Vertex u = 0; u < cur.graph.order(); ++u) {
      max_degree = std::max(max_degree, cur.graph.degree(u));
      for (Vertex v : cur.graph.neighbors(u)) {
        if (u < v) {
          const auto [lo, hi] = std::minmax(bucket_of[u], bucket_of[v]);
          ++count[static_cast<std::size_t>(lo) * b + static_cast<std::size_t>(hi)];
        }
      }
    }

    std::size_t best_i = 0;
    std::size_t best_j = 0;
    std::uint64_t best_score = 0;
    bool have = false;
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = i; j < b; ++j) {
        std::uint64_t score = count[i * b + i];
        if (j != i) score += count[j * b + j] + count[i * b + j];
        if (!have || score > best_score) {
          best_i = i;
          best_j = j;
          best_score = score;
          have = true;
        }
      }
    }

    std::vector<Vertex> chosen(buckets[best_i].vertices.begin(), buckets[best_i].vertices.end());
    if (best_j != best_i) chosen.insert(chosen.end(), buckets[best_j].vertices.begin(), buckets[best_j].vertices.end());
    const Subgraph selected = induced_subgraph(cur.graph, VertexSet::from_unsorted(std::move(chosen)));
    const double level_bound =
        static_cast<double>(m) / std::pow(static_cast<double>(ceil_log2(max_degree)) + 1.0, 2.0);
    report.checks.push_back(make_certificate(tagged("bucket_retention", round), Relation::ge,
                                             static_cast<double>(selected.graph.size()), level_bound, 0.0));

    const double d_select = average_degree(selected.graph);
    const Subgraph peeled = peel(selected.graph, params.theta);
    report.rounds = round;
    report.bucket_path.emplace_back(buckets[best_i].index, buckets[best_j].index);
    if (peeled.graph.size() == 0) {
      report.collapsed = true;
      break;
    }

    std::size_t peeled_min = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < peeled.graph.order(); ++v) peeled_min = std::min(peeled_min, peeled.graph.degree(v));
    report.checks.push_back(make_certificate(tagged("peel_floor", round), Relation::ge,
                                             static_cast<double>(peeled_min),
                                             params.theta * average_degree(peeled.graph), 0.0));
    report.checks.push_back(make_certificate(tagged("peel_retention", round), Relation::ge,
                                             static_cast<double>(peeled.graph.size()),
                                             (1.0 - params.theta) * static_cast<double>(selected.graph.size()), 0.0,
                                             false));
    report.checks.push_back(make_certificate(tagged("selection_density", round), Relation::ge,
                                             static_cast<double>(peeled.graph.size()),
                                             params.theta / 2.0 * d_select *
                                                 static_cast<double>(peeled.graph.order()) / 2.0,
                                             0.0, false));

    const bool changed = peeled.graph.order() != cur.graph.order() || peeled.graph.size() != m;
    cur = compose(cur, compose(selected, peeled));
    if (verify_almost_regular(cur.graph, params.K_target).holds) {
      report.target_met = true;
      break;
    }
    if (!changed) break;
  }

  const DegreeStats stats = degree_stats(cur.graph);
  report.n_prime = cur.graph.order();
  report.e_prime = cur.graph.size();
  report.delta_max = stats.delta_max;
  report.delta_min = stats.delta_min;
  report.K_achieved = stats.delta_min == 0
                          ? std::numeric_limits<double>::infinity()
                          : static_cast<double>(stats.delta_max) / static_cast<double>(stats.delta_min);
  report.c_prime_achieved =
      static_cast<double>(report.e_prime) / std::pow(static_cast<double>(report.n_prime), 1.0 + params.eps);
  report.density_pass = report.c_prime_achieved > params.c_prime_floor;
  report.target_met = report.K_achieved <= params.K_target;
  report.checks.push_back(make_certificate("min_degree_positive", Relation::ge,
                                           static_cast<double>(report.delta_min), 1.0, 0.0, !report.collapsed));
  report.checks.push_back(make_certificate("self_consistent_K", Relation::le, static_cast<double>(report.delta_max),
                                           report.K_achieved * static_cast<double>(report.delta_min),
                                           1e-12 * static_cast<double>(report.delta_max),
                                           !report.collapsed));
  return {std::move(cur), std::move(report)};
}

}  // namespace specreg
