#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "specreg/graph.hpp"

/// Data-parallel inner loops over a Graph.
///
/// The OpenMP kernels split every reduction into fixed blocks of
/// `kReductionBlock` rows, reduce each block serially and then add the block
/// partials in block order. The result therefore does not depend on the number
/// of threads. `reference::` holds plain serial loops with the natural
/// summation order; they exist for tests and benchmarks only.
namespace specreg::kernels {

inline constexpr std::size_t kReductionBlock = 1024;

/// Threads used by the parallel kernels: SPECREG_THREADS when set (and >= 1),
/// otherwise the OpenMP default.
int thread_count();
/// Overrides the thread count for this process (0 restores the default).
void set_thread_count(int threads);

/// y = A x
void spmv(const Graph& g, std::span<const double> x, std::span<double> y);

double dot(std::span<const double> a, std::span<const double> b);

/// Sum over undirected edges uv of x_u x_v.
double edge_weight(const Graph& g, std::span<const double> x);

/// Weights of edges leaving part `source`, split by the part of the other end.
///
/// Returns w of length `parts` with w[source] = sum over edges inside the
/// source part (each counted once) and w[i] = sum over edges between the
/// source part and part i.
std::vector<double> part_weights(const Graph& g, std::span<const double> x,
                                 std::span<const std::uint32_t> part_of, std::uint32_t source,
                                 std::uint32_t parts);

struct RayleighResidual {
  double lambda = 0.0;
  double residual = 0.0;
};

/// x^T A x / x^T x and ||Ax - lambda x||_2, accumulated in long double so the
/// residual stays meaningful on rows with very large degree.
RayleighResidual rayleigh_residual(const Graph& g, std::span<const double> x);

namespace reference {

void spmv(const Graph& g, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> a, std::span<const double> b);
double edge_weight(const Graph& g, std::span<const double> x);
std::vector<double> part_weights(const Graph& g, std::span<const double> x,
                                 std::span<const std::uint32_t> part_of, std::uint32_t source,
                                 std::uint32_t parts);

}  // namespace reference

}  // namespace specreg::kernels
