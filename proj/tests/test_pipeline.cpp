#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "specreg/generators.hpp"
#include "specreg/pipeline.hpp"

using namespace specreg;

TEST_CASE("audit on a cycle flags every equality") {
  const AuditRecord a = audit(cycle(6));
  CHECK(a.delta_min == 2);
  CHECK(a.d_avg == 2.0);
  CHECK(a.lambda == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(a.delta_max == 2);
  CHECK(a.eq_min_avg);
  CHECK(a.eq_avg_lambda);
  CHECK(a.eq_lambda_max);
  CHECK(a.regular);
  CHECK(a.regularity_consistent);
  CHECK(a.violation_count() == 0);
}

TEST_CASE("audit on a star is a strict chain") {
  const AuditRecord a = audit(star(9));
  CHECK(a.delta_min == 1);
  CHECK(a.d_avg == doctest::Approx(1.8));
  CHECK(a.lambda == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(a.delta_max == 9);
  CHECK_FALSE(a.eq_min_avg);
  CHECK_FALSE(a.eq_avg_lambda);
  CHECK_FALSE(a.eq_lambda_max);
  CHECK_FALSE(a.regular);
  CHECK(a.lambda_ge_density);
  CHECK(a.violation_count() == 0);
}

TEST_CASE("audit of the tightness construction") {
  GenSpec spec;
  spec.family = Family::complete_bipartite;
  spec.n = 10000;
  spec.xi = 0.3;
  const Graph g = generate(spec);
  const std::size_t a = star_part_size(10000, 0.3);
  CHECK(a == 252);
  const AuditRecord r = audit(g, {}, 0.3);
  CHECK(r.lambda == doctest::Approx(oracle::bipartite_lambda(252.0, 9748.0)).epsilon(1e-9));
  // the real-valued sizes n^{0.6} and n - n^{0.6} give about 1564.9
  CHECK(std::sqrt(std::pow(1e4, 0.6) * (1e4 - std::pow(1e4, 0.6))) == doctest::Approx(1564.9).epsilon(1e-4));
  CHECK(0.5 * std::pow(1e4, 0.8) == doctest::Approx(792.4).epsilon(1e-4));
  REQUIRE(r.lambda_ge_half_threshold.has_value());
  CHECK(*r.lambda_ge_half_threshold);
  CHECK(r.violation_count() == 0);
}

TEST_CASE("audit of an edgeless graph") {
  const AuditRecord a = audit(build_graph(4, {}));
  CHECK(a.lambda == 0.0);
  CHECK(a.d_avg == 0.0);
  CHECK(a.regular);
  CHECK(a.violation_count() == 0);
}

TEST_CASE("property: sandwich on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 150;
    const Graph g = gnp(n, static_cast<double>(rng() % 1000) / 1000.0, rng());
    const AuditRecord a = audit(g);
    CHECK(a.violation_count() == 0);
    CHECK(a.min_le_avg);
    CHECK(a.avg_le_lambda);
    CHECK(a.lambda_le_max);
    CHECK(a.lambda_ge_density);
  }
}

TEST_CASE("pipeline on a large clique") {
  DecomposeParams params;
  params.c = 0.9;
  const PipelineResult r = run_pipeline(complete(3000), params);
  const PipelineReport& p = r.report;
  CHECK(p.regime == Regime::paper_constants);
  CHECK(p.decompose.k == 0);
  CHECK(p.decompose.final_n == 3000 - 10);
  CHECK(p.regularity.K_achieved == 1.0);
  CHECK(r.output.graph == complete(2990));
  CHECK(p.theorem_1_5.enforced);
  CHECK(p.theorem_1_5.order_passed);
  CHECK(p.theorem_1_5.density_passed);
  CHECK(p.theorem_1_5.n_floor == doctest::Approx(std::pow(3000.0, 1.0 / 24.0)));
  CHECK(p.theorem_1_5.c_prime > 0.0);
  CHECK(static_cast<double>(p.regularity.e_prime) >=
        p.theorem_1_5.c_prime * std::pow(static_cast<double>(p.regularity.n_prime), 2.0) * (1.0 - 1e-12));
  CHECK(p.violation_count() == 0);
  CHECK(verify_almost_regular(r.output.graph, p.regularity.K_achieved).holds);
}

TEST_CASE("pipeline stage errors") {
  DecomposeParams params;
  try {
    run_pipeline(subdivided_star(3000, 0.3), params);
    FAIL("expected HypothesisNotMet");
  } catch (const StageError& e) {
    CHECK(e.stage() == Stage::decompose);
    CHECK(e.kind() == ErrorKind::hypothesis_not_met);
  }
  try {
    run_pipeline(build_graph(6, {}), params);
    FAIL("expected NoEdges");
  } catch (const StageError& e) {
    CHECK(e.stage() == Stage::decompose);
    CHECK(e.kind() == ErrorKind::no_edges);
  }
}

TEST_CASE("property: pipeline output maps into the input") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 30 + rng() % 200;
    const Graph g = gnp(n, 0.3, rng());
    DecomposeParams params;
    params.p_override = 2 + rng() % 6;
    params.force = true;
    params.c = 0.5;
    params.eps = 0.25;
    PipelineResult r;
    try {
      r = run_pipeline(g, params);
    } catch (const StageError& e) {
      // a forced zero-witness step can leave nothing to regularize
      CHECK(e.stage() == Stage::regularize);
      CHECK(e.kind() == ErrorKind::no_edges);
      continue;
    }
    CHECK(r.report.regime == Regime::override_p);
    CHECK_FALSE(r.report.theorem_1_5.enforced);
    CHECK(r.report.violation_count() == 0);
    CHECK(verify_almost_regular(r.output.graph, r.report.regularity.K_achieved).holds);
    CHECK(r.output.graph.order() <= r.report.decompose.final_n);
    for (const Edge& e : r.output.graph.edge_list()) CHECK(g.has_edge(r.output.host(e.u), r.output.host(e.v)));
  }
}

TEST_CASE("property: subgraphs of the tightness graph have average degree at most 2a") {
  const std::size_t n = 2000;
  const std::size_t a = star_part_size(n, 0.3);
  const Graph g = complete_bipartite(a, n - a);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<bool> in(n);
    const double keep = static_cast<double>(1 + rng() % 100) / 100.0;
    std::size_t count = 0;
    for (std::size_t v = 0; v < n; ++v) {
      in[v] = static_cast<double>(rng() % 10000) / 10000.0 < keep;
      count += in[v];
    }
    if (count == 0) continue;
    const double e = static_cast<double>(oracle::induced_edges(g, in));
    CHECK(2.0 * e / static_cast<double>(count) <= 2.0 * static_cast<double>(a));
    CHECK(2.0 * e / static_cast<double>(count) <= 2.0 * std::pow(static_cast<double>(n), 0.6) + 2.0);
  }
}
