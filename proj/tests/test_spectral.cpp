#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "specreg/generators.hpp"
#include "specreg/kernels.hpp"
#include "specreg/spectral.hpp"

using namespace specreg;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::parse_error;
}

double norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("dominant_eigenpair examples") {
  CHECK(dominant_eigenpair(star(4)).lambda == doctest::Approx(2.0).epsilon(1e-10));

  const EigenPair c6 = dominant_eigenpair(cycle(6));
  CHECK(c6.lambda == doctest::Approx(2.0).epsilon(1e-10));
  for (double v : c6.x) CHECK(v == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-10));

  const EigenPair p3 = dominant_eigenpair(path(3));
  CHECK(p3.lambda == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(p3.x[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(p3.x[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(p3.x[2] == doctest::Approx(0.5).epsilon(1e-9));

  CHECK(dominant_eigenpair(complete_bipartite(3, 4)).lambda == doctest::Approx(std::sqrt(12.0)).epsilon(1e-10));
}

TEST_CASE("eigenpair invariants") {
  const EigenPair e = dominant_eigenpair(gnp(60, 0.2, 4));
  CHECK(std::fabs(norm(e.x) - 1.0) <= 1e-12);
  for (double v : e.x) CHECK(v >= 0.0);
  CHECK(e.residual <= 1e-10);
  CHECK(e.iterations >= 1);
}

TEST_CASE("errors") {
  CHECK(kind_of([] { dominant_eigenpair(Graph{}); }) == ErrorKind::no_edges);
  CHECK(kind_of([] { dominant_eigenpair(path(1)); }) == ErrorKind::no_edges);
  SolverConfig tight;
  tight.max_iterations = 2;
  try {
    dominant_eigenpair(path(40), tight);
    FAIL("expected NotConverged");
  } catch (const NotConvergedError& e) {
    CHECK(e.kind() == ErrorKind::not_converged);
    CHECK(e.best().x.size() == 40);
    CHECK(e.best().residual > tight.tol);
  }
  SolverConfig bad;
  bad.tol = 0.0;
  CHECK(kind_of([&] { dominant_eigenpair(path(3), bad); }) == ErrorKind::parameter_out_of_range);
}

TEST_CASE("rayleigh examples") {
  const std::vector<double> u(6, 1.0 / std::sqrt(6.0));
  CHECK(rayleigh(cycle(6), u) == doctest::Approx(2.0));
  const std::vector<double> e0{1.0, 0.0, 0.0};
  CHECK(rayleigh(path(3), e0) == 0.0);
  const std::vector<double> p3{0.5, 1.0 / std::sqrt(2.0), 0.5};
  CHECK(rayleigh(path(3), p3) == doctest::Approx(std::sqrt(2.0)));

  const std::vector<double> short_x{1.0};
  CHECK(kind_of([&] { rayleigh(path(3), short_x); }) == ErrorKind::dimension_mismatch);
  const std::vector<double> long_x{1.0, 1.0, 0.0};
  CHECK(kind_of([&] { rayleigh(path(3), long_x); }) == ErrorKind::not_unit);
}

TEST_CASE("exact small oracle examples") {
  CHECK(exact_spectral_radius_small(complete(5)) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(exact_spectral_radius_small(path(4)) == doctest::Approx(oracle::path_lambda(4)).epsilon(1e-12));
  CHECK(exact_spectral_radius_small(cycle(4)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(kind_of([] { exact_spectral_radius_small(path(65)); }) == ErrorKind::too_large);
}

TEST_CASE("disconnected graphs pick the dominant component") {
  // K_4 on {5..8} beats the path on {0..4}
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  for (Vertex u = 5; u < 9; ++u)
    for (Vertex v = u + 1; v < 9; ++v) edges.push_back({u, v});
  const EigenPair e = dominant_eigenpair(build_graph(10, edges));
  CHECK(e.lambda == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(e.component.size() == 4);
  CHECK(e.component[0] == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(e.x[v] == 0.0);
  CHECK(e.x[9] == 0.0);

  // equal components: the one with the smaller minimum id wins
  std::vector<Edge> twins;
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = u + 1; v < 3; ++v) {
      twins.push_back({u, v});
      twins.push_back({static_cast<Vertex>(u + 3), static_cast<Vertex>(v + 3)});
    }
  CHECK(dominant_eigenpair(build_graph(6, twins)).component[0] == 0);
}

TEST_CASE("property: Jacobi oracle, library oracle and iteration agree") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const Graph g = gnp(n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, rng());
    if (g.size() == 0) continue;
    const double jac = oracle::spectral_radius(g);
    CHECK(exact_spectral_radius_small(g) == doctest::Approx(jac).epsilon(1e-11));
    CHECK(dominant_eigenpair(g).lambda == doctest::Approx(jac).epsilon(1e-9));
  }
}

TEST_CASE("property: sandwich, monotonicity and Rayleigh lower bound") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 80;
    const Graph g = gnp(n, 0.05 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng());
    if (g.size() == 0) continue;
    const EigenPair e = dominant_eigenpair(g);
    const DegreeStats st = degree_stats(g);
    CHECK(st.d_avg <= e.lambda + e.residual);
    CHECK(e.lambda <= static_cast<double>(st.delta_max) + e.residual);

    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3) keep.push_back(v);
    }
    const Subgraph h = induced_subgraph(g, VertexSet::from_sorted(keep));
    if (h.graph.size() > 0) CHECK(dominant_eigenpair(h.graph).lambda <= e.lambda + 2e-10);

    std::vector<double> y(n);
    for (double& v : y) v = static_cast<double>(rng() % 1000) - 500.0;
    const double ny = norm(y);
    for (double& v : y) v /= ny;
    CHECK(rayleigh(g, y) <= e.lambda + e.residual);
  }
}

TEST_CASE("regular graphs attain both ends of the sandwich") {
  for (const Graph& g : {cycle(9), complete(7), complete_bipartite(6, 6)}) {
    const EigenPair e = dominant_eigenpair(g);
    const DegreeStats st = degree_stats(g);
    CHECK(std::fabs(e.lambda - st.d_avg) <= 1e-9);
    CHECK(std::fabs(e.lambda - static_cast<double>(st.delta_max)) <= 1e-9);
  }
}

TEST_CASE("thread count does not change results") {
  const Graph g = gnp(3000, 0.01, 8);
  kernels::set_thread_count(1);
  const EigenPair one = dominant_eigenpair(g);
  kernels::set_thread_count(4);
  const EigenPair four = dominant_eigenpair(g);
  kernels::set_thread_count(0);
  CHECK(one.lambda == four.lambda);
  CHECK(one.x == four.x);
  CHECK(one.iterations == four.iterations);
}
