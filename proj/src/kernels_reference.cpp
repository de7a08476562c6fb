#include "specreg/kernels.hpp"

namespace specreg::kernels::reference {

void spmv(const Graph& g, std::span<const double> x, std::span<double> y) {
  for (Vertex u = 0; u < g.order(); ++u) {
    double acc = 0.0;
    for (Vertex v : g.neighbors(u)) acc += x[v];
    y[u] = acc;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double edge_weight(const Graph& g, std::span<const double> x) {
  double acc = 0.0;
  for (const Edge& e : g.edge_list()) acc += x[e.u] * x[e.v];
  return acc;
}

std::vector<double> part_weights(const Graph& g, std::span<const double> x,
                                 std::span<const std::uint32_t> part_of, std::uint32_t source,
                                 std::uint32_t parts) {
  std::vector<double> w(parts, 0.0);
  for (const Edge& e : g.edge_list()) {
    const std::uint32_t pu = part_of[e.u];
    const std::uint32_t pv = part_of[e.v];
    if (pu == source) {
      w[pv] += x[e.u] * x[e.v];
    } else if (pv == source) {
      w[pu] += x[e.u] * x[e.v];
    }
  }
  return w;
}

}  // namespace specreg::kernels::reference
