#include <doctest.h>

#include <cmath>
#include <random>

#include "specreg/generators.hpp"
#include "specreg/kernels.hpp"

using namespace specreg;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = d(rng);
  return x;
}

bool close(double a, double b, double scale) { return std::fabs(a - b) <= 1e-12 * std::max(1.0, scale); }

}  // namespace

TEST_CASE("parallel kernels match the serial reference") {
  std::mt19937_64 rng(31);
  for (std::size_t n : {1u, 7u, 1023u, 1024u, 1025u, 5000u}) {
    const Graph g = gnm(n, std::min<std::uint64_t>(n * 6, n * (n - 1) / 2), rng());
    const auto x = random_vector(rng, n);
    const auto z = random_vector(rng, n);

    std::vector<double> y(n), y_ref(n);
    kernels::spmv(g, x, y);
    kernels::reference::spmv(g, x, y_ref);
    CHECK(y == y_ref);

    CHECK(close(kernels::dot(x, z), kernels::reference::dot(x, z), static_cast<double>(n)));
    CHECK(close(kernels::edge_weight(g, x), kernels::reference::edge_weight(g, x), static_cast<double>(g.size())));

    const std::uint32_t parts = 5;
    std::vector<std::uint32_t> part_of(n);
    for (auto& p : part_of) p = static_cast<std::uint32_t>(rng() % parts);
    for (std::uint32_t src = 0; src < parts; ++src) {
      const auto w = kernels::part_weights(g, x, part_of, src, parts);
      const auto w_ref = kernels::reference::part_weights(g, x, part_of, src, parts);
      REQUIRE(w.size() == parts);
      for (std::uint32_t i = 0; i < parts; ++i) CHECK(close(w[i], w_ref[i], static_cast<double>(g.size())));
    }
  }
}

TEST_CASE("part weights partition the edge weight") {
  std::mt19937_64 rng(8);
  const Graph g = gnp(300, 0.1, 3);
  const auto x = random_vector(rng, 300);
  const std::uint32_t parts = 3;
  std::vector<std::uint32_t> part_of(300);
  for (std::size_t v = 0; v < 300; ++v) part_of[v] = static_cast<std::uint32_t>(v % parts);
  // inside(0) + inside(1) + inside(2) + cross(0,1) + cross(0,2) + cross(1,2)
  const auto w0 = kernels::reference::part_weights(g, x, part_of, 0, parts);
  const auto w1 = kernels::reference::part_weights(g, x, part_of, 1, parts);
  const auto w2 = kernels::reference::part_weights(g, x, part_of, 2, parts);
  const double total = w0[0] + w1[1] + w2[2] + w0[1] + w0[2] + w1[2];
  CHECK(total == doctest::Approx(kernels::reference::edge_weight(g, x)).epsilon(1e-12));
  CHECK(w0[1] == doctest::Approx(w1[0]).epsilon(1e-12));
}

TEST_CASE("reductions are bit-identical across thread counts") {
  std::mt19937_64 rng(99);
  const Graph g = gnp(6000, 0.003, 17);
  const auto x = random_vector(rng, 6000);
  std::vector<std::uint32_t> part_of(6000);
  for (auto& p : part_of) p = static_cast<std::uint32_t>(rng() % 4);

  kernels::set_thread_count(1);
  const double d1 = kernels::dot(x, x);
  const double e1 = kernels::edge_weight(g, x);
  const auto p1 = kernels::part_weights(g, x, part_of, 2, 4);
  for (int t : {2, 3, 8}) {
    kernels::set_thread_count(t);
    CHECK(kernels::thread_count() == t);
    CHECK(kernels::dot(x, x) == d1);
    CHECK(kernels::edge_weight(g, x) == e1);
    CHECK(kernels::part_weights(g, x, part_of, 2, 4) == p1);
  }
  kernels::set_thread_count(0);
}

TEST_CASE("rayleigh_residual against a direct evaluation") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 3000;
    const Graph g = gnp(n, 0.02, rng());
    const auto x = random_vector(rng, n);
    std::vector<double> ax(n);
    kernels::reference::spmv(g, x, ax);
    double xax = 0.0;
    double xx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      xax += x[i] * ax[i];
      xx += x[i] * x[i];
    }
    const double lambda = xax / xx;
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) r2 += (ax[i] - lambda * x[i]) * (ax[i] - lambda * x[i]);
    const kernels::RayleighResidual rr = kernels::rayleigh_residual(g, x);
    CHECK(rr.lambda == doctest::Approx(lambda).epsilon(1e-10));
    CHECK(rr.residual == doctest::Approx(std::sqrt(r2)).epsilon(1e-9));
  }
}

TEST_CASE("rayleigh_residual resolves the eigenvector of a large star") {
  // x = (1/sqrt 2, 1/sqrt(2m), ...) is exact for K_{1,m}; the hub row sums m terms
  const std::size_t m = 100000;
  const Graph g = star(m);
  std::vector<double> x(m + 1, 1.0 / std::sqrt(2.0 * static_cast<double>(m)));
  x[0] = 1.0 / std::sqrt(2.0);
  const kernels::RayleighResidual rr = kernels::rayleigh_residual(g, x);
  CHECK(rr.lambda == doctest::Approx(std::sqrt(static_cast<double>(m))).epsilon(1e-14));
  CHECK(rr.residual <= 1e-11);
}

TEST_CASE("rayleigh_residual is thread invariant") {
  const Graph g = gnp(5000, 0.01, 4);
  std::mt19937_64 rng(2);
  const auto x = random_vector(rng, 5000);
  kernels::set_thread_count(1);
  const auto one = kernels::rayleigh_residual(g, x);
  for (int t : {2, 3, 8}) {
    kernels::set_thread_count(t);
    const auto many = kernels::rayleigh_residual(g, x);
    CHECK(many.lambda == one.lambda);
    CHECK(many.residual == one.residual);
  }
  kernels::set_thread_count(0);
}
