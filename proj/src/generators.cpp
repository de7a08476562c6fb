#include "specreg/generators.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <unordered_set>
#include <vector>

namespace specreg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::parameter_out_of_range, what); }

double uniform53(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

std::uint64_t pair_count(std::size_t n) { return static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2; }

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::star: return "star";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::subdivided_star: return "subdivided_star";
    case Family::gnp: return "gnp";
    case Family::gnm: return "gnm";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::complete, Family::complete_bipartite, Family::star, Family::path, Family::cycle,
                   Family::subdivided_star, Family::gnp, Family::gnm}) {
    if (to_string(f) == name) return f;
  }
  bad("unknown generator family '" + std::string(name) + "'");
}

std::size_t star_part_size(std::size_t n, double xi) {
  const long double t = std::pow(static_cast<long double>(n), 2.0L * static_cast<long double>(xi));
  const long double r = std::round(t);
  if (std::fabs(t - r) <= 1e-9L * std::max(1.0L, t)) return static_cast<std::size_t>(r);
  return static_cast<std::size_t>(std::ceil(t));
}

void GenSpec::validate() const {
  switch (family) {
    case Family::complete:
    case Family::path:
    case Family::star:
      if (n < 1) bad(std::string(to_string(family)) + " needs n >= 1");
      break;
    case Family::cycle:
      if (n < 3) bad("cycle needs n >= 3");
      break;
    case Family::complete_bipartite:
      if (xi) {
        if (!(*xi > 0.0 && *xi <= 0.5)) bad("complete_bipartite xi must lie in (0, 1/2]");
        if (n < 2) bad("complete_bipartite with xi needs n >= 2");
        if (star_part_size(n, *xi) >= n) bad("complete_bipartite: ceil(n^{2 xi}) must be < n");
      } else if (a < 1 || b < 1) {
        bad("complete_bipartite needs a, b >= 1");
      }
      break;
    case Family::subdivided_star:
      if (!xi) bad("subdivided_star needs xi");
      if (n < 3) bad("subdivided_star needs n >= 3");
      if (!(*xi > 0.0 && *xi <= 0.5)) bad("subdivided_star xi must lie in (0, 1/2]");
      if (star_part_size(n, *xi) > n) bad("subdivided_star: ceil(n^{2 xi}) exceeds n");
      break;
    case Family::gnp:
      if (n < 1) bad("gnp needs n >= 1");
      if (!(probability >= 0.0 && probability <= 1.0)) bad("gnp probability must lie in [0, 1]");
      break;
    case Family::gnm:
      if (n < 1) bad("gnm needs n >= 1");
      if (edges > pair_count(n)) bad("gnm: m exceeds n(n-1)/2");
      break;
  }
}

Graph generate(const GenSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::complete: return complete(spec.n);
    case Family::path: return path(spec.n);
    case Family::cycle: return cycle(spec.n);
    case Family::star: return star(spec.n - 1);
    case Family::complete_bipartite:
      if (spec.xi) {
        const std::size_t a = star_part_size(spec.n, *spec.xi);
        return complete_bipartite(a, spec.n - a);
      }
      return complete_bipartite(spec.a, spec.b);
    case Family::subdivided_star: return subdivided_star(spec.n, *spec.xi);
    case Family::gnp: return gnp(spec.n, spec.probability, spec.seed);
    case Family::gnm: return gnm(spec.n, spec.edges, spec.seed);
  }
  bad("unreachable family");
}

Graph subdivided_star(std::size_t n, double xi) {
  GenSpec{.family = Family::subdivided_star, .n = n, .xi = xi}.validate();
  const std::size_t s = star_part_size(n, xi);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t leaf = 1; leaf + 1 < s; ++leaf) edges.push_back({0, static_cast<Vertex>(leaf)});
  // pendant path 0 - s - s+1 - ... - n-1 - (s-1)
  Vertex prev = 0;
  for (std::size_t w = s; w < n; ++w) {
    edges.push_back({prev, static_cast<Vertex>(w)});
    prev = static_cast<Vertex>(w);
  }
  edges.push_back({prev, static_cast<Vertex>(s - 1)});
  return build_graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) bad("complete_bipartite needs a, b >= 1");
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
  }
  return build_graph(a + b, edges);
}

Graph complete(std::size_t n) {
  if (n < 1) bad("complete needs n >= 1");
  // direct CSR fill; K_n at desk scale is tens of millions of slots
  std::vector<std::uint64_t> offsets(n + 1);
  for (std::size_t v = 0; v <= n; ++v) offsets[v] = v * (n - 1);
  std::vector<Vertex> adjacency(n * (n - 1));
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t k = offsets[u];
    for (std::size_t v = 0; v < n; ++v) {
      if (v != u) adjacency[k++] = static_cast<Vertex>(v);
    }
  }
  return GraphAssembler::assemble(std::move(offsets), std::move(adjacency));
}

Graph path(std::size_t n) {
  if (n < 1) bad("path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(v - 1), static_cast<Vertex>(v)});
  return build_graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) bad("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(v - 1), static_cast<Vertex>(v)});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return build_graph(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, static_cast<Vertex>(v)});
  return build_graph(leaves + 1, edges);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  GenSpec spec;
  spec.family = Family::gnp;
  spec.n = n;
  spec.probability = p;
  spec.validate();
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (uniform53(rng) < p) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return build_graph(n, edges);
}

Graph gnm(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  GenSpec spec;
  spec.family = Family::gnm;
  spec.n = n;
  spec.edges = m;
  spec.validate();
  std::mt19937_64 rng(seed);
  const std::uint64_t total = pair_count(n);
  const bool complement = m > total / 2;
  const std::uint64_t draws = complement ? total - m : m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(draws * 2);
  std::vector<Edge> picked;
  while (picked.size() < draws) {
    const auto u = static_cast<Vertex>(bounded(rng, n));
    const auto v = static_cast<Vertex>(bounded(rng, n));
    if (u == v) continue;
    const Edge e{std::min(u, v), std::max(u, v)};
    const std::uint64_t key = static_cast<std::uint64_t>(e.u) * n + e.v;
    if (chosen.insert(key).second) picked.push_back(e);
  }
  if (!complement) return build_graph(n, picked);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!chosen.contains(static_cast<std::uint64_t>(u) * n + v)) {
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      }
    }
  }
  return build_graph(n, edges);
}

}  // namespace specreg
