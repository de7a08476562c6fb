#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "specreg/generators.hpp"
#include "specreg/regularize.hpp"

using namespace specreg;

namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edge_list();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edge_list()) edges.push_back({static_cast<Vertex>(e.u + shift), static_cast<Vertex>(e.v + shift)});
  return build_graph(a.order() + b.order(), edges);
}

}  // namespace

TEST_CASE("degree buckets") {
  const auto c6 = degree_buckets(cycle(6));
  REQUIRE(c6.size() == 1);
  CHECK(c6[0].index == 1);
  CHECK(c6[0].vertices.size() == 6);

  const auto s = degree_buckets(star(9));
  REQUIRE(s.size() == 2);
  CHECK(s[0].index == 0);
  CHECK(s[0].vertices.size() == 9);
  CHECK(s[1].index == 3);
  CHECK(s[1].vertices == VertexSet::from_unsorted({0}));

  const auto k5 = degree_buckets(complete(5));
  REQUIRE(k5.size() == 1);
  CHECK(k5[0].index == 2);

  CHECK_THROWS_AS(degree_buckets(build_graph(3, {})), Error);
}

TEST_CASE("isolated vertices fall in no bucket") {
  const Graph g = build_graph(5, std::vector<Edge>{{0, 1}});
  const auto b = degree_buckets(g);
  REQUIRE(b.size() == 1);
  CHECK(b[0].vertices.size() == 2);
}

TEST_CASE("regular input is returned unchanged") {
  RegularizeParams params;
  const RegularizeResult r = almost_regularize(cycle(5), params);
  CHECK(r.output.graph == cycle(5));
  CHECK(r.report.K_achieved == 1.0);
  CHECK(r.report.rounds == 1);
  CHECK(r.report.target_met);
  CHECK_FALSE(r.report.collapsed);
  CHECK(r.report.violation_count() == 0);
}

TEST_CASE("clique beside a star") {
  const Graph g = disjoint_union(complete(5), star(9));
  const RegularizeResult r = almost_regularize(g, {});
  CHECK(r.output.graph == complete(5));
  CHECK(r.output.host_ids == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(r.report.K_achieved == 1.0);
  CHECK(r.report.violation_count() == 0);
}

TEST_CASE("unbalanced complete bipartite graph survives peeling") {
  const RegularizeResult r = almost_regularize(complete_bipartite(3, 100), {});
  CHECK(r.output.graph == complete_bipartite(3, 100));
  CHECK(r.report.e_prime == 300);
  CHECK(r.report.K_achieved == doctest::Approx(100.0 / 3.0));
  CHECK(r.report.target_met);
  REQUIRE(r.report.bucket_path.size() == 1);
  CHECK(r.report.bucket_path[0] == std::pair<unsigned, unsigned>{1, 6});
}

TEST_CASE("verify_almost_regular") {
  CHECK(verify_almost_regular(cycle(6), 1.0).holds);
  const RegularityWitness w = verify_almost_regular(star(9), 8.0);
  CHECK_FALSE(w.holds);
  CHECK(*w.argmax == 0);
  CHECK(*w.argmin == 1);
  CHECK(verify_almost_regular(star(9), 9.0).holds);
  const RegularityWitness e = verify_almost_regular(build_graph(0, {}), 1.0);
  CHECK(e.holds);
  CHECK_FALSE(e.argmax.has_value());
  // an isolated vertex makes delta = 0
  CHECK_FALSE(verify_almost_regular(build_graph(3, std::vector<Edge>{{0, 1}}), 100.0).holds);
}

TEST_CASE("parameter validation") {
  RegularizeParams p;
  p.theta = 1.0;
  CHECK_THROWS_AS(almost_regularize(cycle(5), p), Error);
  p = {};
  p.K_target = 1.5;
  CHECK_THROWS_AS(almost_regularize(cycle(5), p), Error);
  p = {};
  p.eps = 0.0;
  CHECK_THROWS_AS(almost_regularize(cycle(5), p), Error);
  try {
    almost_regularize(build_graph(4, {}), {});
    FAIL("expected NoEdges");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_edges);
  }
}

TEST_CASE("property: regularize output is a certified almost-regular subgraph") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 10 + rng() % 300;
    const double prob = 0.02 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
    const Graph g = trial % 4 == 0 ? subdivided_star(n, 0.4) : gnp(n, prob, rng());
    if (g.size() == 0) continue;
    const RegularizeResult r = almost_regularize(g, {});
    const RegularityReport& rep = r.report;
    CHECK(rep.violation_count() == 0);
    CHECK(r.output.graph.order() == rep.n_prime);
    CHECK(r.output.graph.size() == rep.e_prime);
    CHECK(rep.e_prime >= 1);
    CHECK(rep.e_prime <= rep.n_prime * (rep.n_prime - 1) / 2);
    CHECK(rep.delta_min >= 1);
    CHECK(rep.K_achieved >= 1.0);
    CHECK(verify_almost_regular(r.output.graph, rep.K_achieved).holds);
    CHECK(rep.c_prime_achieved > 0.0);
    CHECK(rep.bucket_path.size() == rep.rounds);
    for (std::size_t i = 1; i < r.output.host_ids.size(); ++i) CHECK(r.output.host_ids[i - 1] < r.output.host_ids[i]);
    for (const Edge& e : r.output.graph.edge_list()) CHECK(g.has_edge(r.output.host(e.u), r.output.host(e.v)));
    for (const auto& [i, j] : rep.bucket_path) CHECK(i <= j);
  }
}

TEST_CASE("property: deterministic reruns") {
  const Graph g = gnp(400, 0.1, 99);
  const RegularizeResult a = almost_regularize(g, {});
  const RegularizeResult b = almost_regularize(g, {});
  CHECK(a.output.host_ids == b.output.host_ids);
  CHECK(a.output.graph == b.output.graph);
  CHECK(a.report.bucket_path == b.report.bucket_path);
  CHECK(a.report.c_prime_achieved == b.report.c_prime_achieved);
}
