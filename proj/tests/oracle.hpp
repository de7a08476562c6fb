#pragma once

// Test-only reference computations. Nothing here calls into specreg beyond
// reading a Graph's edge list, so every routine is an independent check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "specreg/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix adjacency(const specreg::Graph& g) {
  const std::size_t n = g.order();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edge_list()) {
    a[e.u][e.v] = 1.0;
    a[e.v][e.u] = 1.0;
  }
  return a;
}

// Cyclic Jacobi rotations; returns all eigenvalues of a symmetric matrix.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  return ev;
}

inline double spectral_radius(const specreg::Graph& g) {
  if (g.order() == 0) return 0.0;
  const auto ev = jacobi_eigenvalues(adjacency(g));
  return *std::max_element(ev.begin(), ev.end());
}

// Closed forms.
inline double star_lambda(double leaves) { return std::sqrt(leaves); }
inline double bipartite_lambda(double a, double b) { return std::sqrt(a * b); }
inline double path_lambda(double n) { return 2.0 * std::cos(std::numbers::pi / (n + 1.0)); }

// Perron vector of K_{1,k}: center 1/sqrt 2, each leaf 1/sqrt(2k).
inline std::vector<double> star_vector(std::size_t leaves) {
  std::vector<double> x(leaves + 1, 1.0 / std::sqrt(2.0 * static_cast<double>(leaves)));
  x[0] = 1.0 / std::sqrt(2.0);
  return x;
}

// ceil(18^{(2-2 eps)/eps}) for eps = num/den, exact integer arithmetic; nullopt above 2^63.
inline std::optional<std::uint64_t> part_count(std::uint64_t num, std::uint64_t den) {
  // exponent = (2 den - 2 num) / num; only integral exponents are handled here
  const std::uint64_t top = 2 * den - 2 * num;
  if (top % num != 0) return std::nullopt;
  unsigned __int128 v = 1;
  for (std::uint64_t i = 0; i < top / num; ++i) {
    v *= 18;
    if (v > (static_cast<unsigned __int128>(1) << 63)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(v);
}

// Edges of G[S] counted straight from the edge list.
inline std::uint64_t induced_edges(const specreg::Graph& g, const std::vector<bool>& in) {
  std::uint64_t m = 0;
  for (const auto& e : g.edge_list()) m += in[e.u] && in[e.v];
  return m;
}

struct Degrees {
  std::size_t max = 0;
  std::size_t min = 0;
};

inline Degrees degrees(const specreg::Graph& g) {
  std::vector<std::size_t> d(g.order(), 0);
  for (const auto& e : g.edge_list()) {
    ++d[e.u];
    ++d[e.v];
  }
  if (d.empty()) return {};
  return {*std::max_element(d.begin(), d.end()), *std::min_element(d.begin(), d.end())};
}

// Sum over edges with both ends in part a (a == b) or crossing a-b, from the edge list.
inline double part_weight(const specreg::Graph& g, const std::vector<double>& x,
                          const std::vector<std::uint32_t>& part_of, std::uint32_t a, std::uint32_t b) {
  double w = 0.0;
  for (const auto& e : g.edge_list()) {
    const auto pu = part_of[e.u];
    const auto pv = part_of[e.v];
    if ((pu == a && pv == b) || (pu == b && pv == a)) w += x[e.u] * x[e.v];
  }
  return w;
}

// Is the graph a forest (union-find)?
inline bool is_forest(const specreg::Graph& g) {
  std::vector<std::size_t> parent(g.order());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edge_list()) {
    const auto ru = find(e.u);
    const auto rv = find(e.v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

}  // namespace oracle
