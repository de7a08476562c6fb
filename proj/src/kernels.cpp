#include "specreg/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

namespace specreg::kernels {

namespace {

std::atomic<int> g_override{0};

int env_threads() {
  static const int value = [] {
    const char* raw = std::getenv("SPECREG_THREADS");
    if (raw == nullptr) return 0;
    try {
      int t = std::stoi(raw);
      return t >= 1 ? t : 0;
    } catch (...) {
      return 0;
    }
  }();
  return value;
}

std::size_t block_count(std::size_t rows) { return (rows + kReductionBlock - 1) / kReductionBlock; }

double sum_in_order(const std::vector<double>& partials) {
  double s = 0.0;
  for (double p : partials) s += p;
  return s;
}

}  // namespace

int thread_count() {
  if (int o = g_override.load(); o > 0) return o;
  if (int e = env_threads(); e > 0) return e;
  return omp_get_max_threads();
}

void set_thread_count(int threads) { g_override.store(threads > 0 ? threads : 0); }

void spmv(const Graph& g, std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto offsets = g.offsets();
  const auto adj = g.adjacency();
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (std::int64_t u = 0; u < n; ++u) {
    double acc = 0.0;
    for (std::uint64_t k = offsets[u]; k < offsets[u + 1]; ++k) acc += x[adj[k]];
    y[u] = acc;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t blocks = block_count(a.size());
  std::vector<double> partials(blocks, 0.0);
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
    const std::size_t lo = blk * kReductionBlock;
    const std::size_t hi = std::min(a.size(), lo + kReductionBlock);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += a[i] * b[i];
    partials[blk] = acc;
  }
  return sum_in_order(partials);
}

double edge_weight(const Graph& g, std::span<const double> x) {
  const std::size_t n = g.order();
  const std::size_t blocks = block_count(n);
  std::vector<double> partials(blocks, 0.0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
    const std::size_t lo = blk * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    double acc = 0.0;
    for (std::size_t u = lo; u < hi; ++u) {
      double row = 0.0;
      for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
        if (v > u) row += x[v];
      }
      acc += x[u] * row;
    }
    partials[blk] = acc;
  }
  return sum_in_order(partials);
}

std::vector<double> part_weights(const Graph& g, std::span<const double> x,
                                 std::span<const std::uint32_t> part_of, std::uint32_t source,
                                 std::uint32_t parts) {
  const std::size_t n = g.order();
  const std::size_t blocks = block_count(n);
  std::vector<double> partials(blocks * parts, 0.0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
    const std::size_t lo = blk * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    double* acc = partials.data() + blk * parts;
    for (std::size_t u = lo; u < hi; ++u) {
      if (part_of[u] != source || x[u] == 0.0) continue;
      for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
        const std::uint32_t pv = part_of[v];
        // inside edges are visited from both ends; keep the u < v visit
        if (pv == source && v < u) continue;
        acc[pv] += x[u] * x[v];
      }
    }
  }
  std::vector<double> w(parts, 0.0);
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    for (std::uint32_t i = 0; i < parts; ++i) w[i] += partials[blk * parts + i];
  }
  return w;
}

RayleighResidual rayleigh_residual(const Graph& g, std::span<const double> x) {
  const std::size_t n = g.order();
  const std::size_t blocks = block_count(n);
  std::vector<long double> ax(n);
  std::vector<long double> num(blocks, 0.0L);
  std::vector<long double> den(blocks, 0.0L);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
    const std::size_t lo = blk * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    for (std::size_t u = lo; u < hi; ++u) {
      long double row = 0.0L;
      for (Vertex v : g.neighbors(static_cast<Vertex>(u))) row += x[v];
      ax[u] = row;
      num[blk] += x[u] * row;
      den[blk] += static_cast<long double>(x[u]) * x[u];
    }
  }
  long double xax = 0.0L;
  long double xx = 0.0L;
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    xax += num[blk];
    xx += den[blk];
  }
  const long double lambda = xx > 0.0L ? xax / xx : 0.0L;
  std::vector<long double> sq(blocks, 0.0L);
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
    const std::size_t lo = blk * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    for (std::size_t u = lo; u < hi; ++u) {
      const long double r = ax[u] - lambda * x[u];
      sq[blk] += r * r;
    }
  }
  long double total = 0.0L;
  for (long double s : sq) total += s;
  return {static_cast<double>(lambda), static_cast<double>(std::sqrt(total))};
}

}  // namespace specreg::kernels
