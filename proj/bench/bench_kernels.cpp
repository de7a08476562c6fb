// Serial reference kernels vs the OpenMP versions on G(n, p) graphs.
// Thread count follows SPECREG_THREADS.

#include <benchmark/benchmark.h>

#include <cmath>
#include <map>
#include <vector>

#include "specreg/generators.hpp"
#include "specreg/kernels.hpp"
#include "specreg/spectral.hpp"

namespace {

using namespace specreg;

// Average degree about 64 at every size.
const Graph& fixture(std::size_t n) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gnp(n, 64.0 / static_cast<double>(n), 7)).first;
  return it->second;
}

std::vector<double> unit_vector(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + static_cast<double>(i % 17) / 17.0;
  double s = 0.0;
  for (double v : x) s += v * v;
  for (double& v : x) v /= std::sqrt(s);
  return x;
}

std::vector<std::uint32_t> parts_of(std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> part(n);
  for (std::size_t i = 0; i < n; ++i) part[i] = static_cast<std::uint32_t>(i % p);
  return part;
}

template <bool Parallel>
void BM_Spmv(benchmark::State& state) {
  const Graph& g = fixture(static_cast<std::size_t>(state.range(0)));
  const auto x = unit_vector(g.order());
  std::vector<double> y(g.order());
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::spmv(g, x, y);
    } else {
      kernels::reference::spmv(g, x, y);
    }
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * g.size()));
}

template <bool Parallel>
void BM_EdgeWeight(benchmark::State& state) {
  const Graph& g = fixture(static_cast<std::size_t>(state.range(0)));
  const auto x = unit_vector(g.order());
  for (auto _ : state) {
    double w = Parallel ? kernels::edge_weight(g, x) : kernels::reference::edge_weight(g, x);
    benchmark::DoNotOptimize(w);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * g.size()));
}

template <bool Parallel>
void BM_PartWeights(benchmark::State& state) {
  const Graph& g = fixture(static_cast<std::size_t>(state.range(0)));
  const auto x = unit_vector(g.order());
  const auto part = parts_of(g.order(), 16);
  for (auto _ : state) {
    auto w = Parallel ? kernels::part_weights(g, x, part, 0, 16) : kernels::reference::part_weights(g, x, part, 0, 16);
    benchmark::DoNotOptimize(w.data());
  }
}

template <bool Parallel>
void BM_Dot(benchmark::State& state) {
  const auto x = unit_vector(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    double d = Parallel ? kernels::dot(x, x) : kernels::reference::dot(x, x);
    benchmark::DoNotOptimize(d);
  }
}

void BM_DominantEigenpair(benchmark::State& state) {
  const Graph& g = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto e = dominant_eigenpair(g);
    benchmark::DoNotOptimize(e.lambda);
  }
}

BENCHMARK(BM_Spmv<false>)->Name("spmv/serial")->Arg(1 << 12)->Arg(1 << 15)->Arg(1 << 17);
BENCHMARK(BM_Spmv<true>)->Name("spmv/openmp")->Arg(1 << 12)->Arg(1 << 15)->Arg(1 << 17);
BENCHMARK(BM_EdgeWeight<false>)->Name("edge_weight/serial")->Arg(1 << 12)->Arg(1 << 15)->Arg(1 << 17);
BENCHMARK(BM_EdgeWeight<true>)->Name("edge_weight/openmp")->Arg(1 << 12)->Arg(1 << 15)->Arg(1 << 17);
BENCHMARK(BM_PartWeights<false>)->Name("part_weights/serial")->Arg(1 << 15)->Arg(1 << 17);
BENCHMARK(BM_PartWeights<true>)->Name("part_weights/openmp")->Arg(1 << 15)->Arg(1 << 17);
BENCHMARK(BM_Dot<false>)->Name("dot/serial")->Arg(1 << 17)->Arg(1 << 20);
BENCHMARK(BM_Dot<true>)->Name("dot/openmp")->Arg(1 << 17)->Arg(1 << 20);
BENCHMARK(BM_DominantEigenpair)->Name("dominant_eigenpair")->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
