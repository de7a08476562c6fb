#include "specreg/graph.hpp"

#include "specreg/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace specreg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::self_loop: return "SelfLoop";
    case ErrorKind::duplicate_edge: return "DuplicateEdge";
    case ErrorKind::vertex_out_of_range: return "VertexOutOfRange";
    case ErrorKind::overlapping_parts: return "OverlappingParts";
    case ErrorKind::partial_overlap: return "PartialOverlap";
    case ErrorKind::empty_graph: return "EmptyGraph";
    case ErrorKind::parameter_out_of_range: return "ParameterOutOfRange";
    case ErrorKind::no_edges: return "NoEdges";
    case ErrorKind::not_converged: return "NotConverged";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::not_unit: return "NotUnit";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::overflow: return "Overflow";
    case ErrorKind::too_few_vertices: return "TooFewVertices";
    case ErrorKind::wrong_type: return "WrongType";
    case ErrorKind::case3_witness_missing: return "Case3WitnessMissing";
    case ErrorKind::hypothesis_not_met: return "HypothesisNotMet";
    case ErrorKind::collapsed: return "Collapsed";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Unknown";
}

// VertexSet ------------------------------------------------------------------

VertexSet VertexSet::from_unsorted(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  return from_sorted(std::move(ids));
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> ids) {
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i - 1] >= ids[i]) {
      throw Error(ErrorKind::parameter_out_of_range,
                  "vertex set must be sorted and distinct (at id " + std::to_string(ids[i]) + ")");
    }
  }
  return VertexSet(std::move(ids));
}

VertexSet VertexSet::range(std::size_t n) {
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

// Graph ----------------------------------------------------------------------

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= order() || v >= order()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (v > u) out.push_back({u, v});
    }
  }
  return out;
}

Graph GraphAssembler::assemble(std::vector<std::uint64_t> offsets, std::vector<Vertex> adjacency) {
  Graph g;
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(adjacency);
  return g;
}

namespace {

void check_range(std::size_t n, std::span<const Edge> edges) {
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::vertex_out_of_range,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") with n = " + std::to_string(n));
    }
  }
}

// Counting-sort style CSR fill; neighbor lists are sorted afterwards.
Graph assemble_symmetric(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (const auto& e : edges) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<Vertex> adjacency(offsets[n]);
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : edges) {
    adjacency[cursor[e.u]++] = e.v;
    adjacency[cursor[e.v]++] = e.u;
  }
#pragma omp parallel for schedule(dynamic, 256) num_threads(kernels::thread_count())
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
    std::sort(adjacency.begin() + offsets[v], adjacency.begin() + offsets[v + 1]);
  }
  return GraphAssembler::assemble(std::move(offsets), std::move(adjacency));
}

}  // namespace

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  check_range(n, edges);
  for (const auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorKind::self_loop, "vertex " + std::to_string(e.u));
  }
  Graph g = assemble_symmetric(n, edges);
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::adjacent_find(nb.begin(), nb.end());
    if (it != nb.end()) {
      throw Error(ErrorKind::duplicate_edge,
                  "(" + std::to_string(std::min(u, *it)) + ", " + std::to_string(std::max(u, *it)) + ")");
    }
  }
  return g;
}

LenientBuild build_graph_lenient(std::size_t n, std::span<const Edge> edges) {
  check_range(n, edges);
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  BuildWarnings w;
  for (const auto& e : edges) {
    if (e.u == e.v) {
      ++w.self_loops_dropped;
      continue;
    }
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(canon.begin(), canon.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  auto last = std::unique(canon.begin(), canon.end());
  w.duplicates_dropped = static_cast<std::uint64_t>(canon.end() - last);
  canon.erase(last, canon.end());
  return {assemble_symmetric(n, canon), w};
}

// Subgraphs ------------------------------------------------------------------

namespace {

void check_subset(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.ids().back() >= g.order()) {
    throw Error(ErrorKind::vertex_out_of_range,
                "vertex " + std::to_string(s.ids().back()) + " with n = " + std::to_string(g.order()));
  }
}

// side[v] is 0 for vertices outside the subgraph. keep(su, sv) decides whether
// an edge between two member sides survives.
template <class Keep>
Subgraph restrict_to(const Graph& g, std::vector<Vertex> members, const std::vector<std::uint8_t>& side,
                  Keep keep) {
  const std::size_t k = members.size();
  std::vector<std::int64_t> local(g.order(), -1);
  for (std::size_t i = 0; i < k; ++i) local[members[i]] = static_cast<std::int64_t>(i);

  std::vector<std::uint64_t> offsets(k + 1, 0);
#pragma omp parallel for schedule(dynamic, 256) num_threads(kernels::thread_count())
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(k); ++i) {
    const Vertex u = members[i];
    std::uint64_t count = 0;
    for (Vertex v : g.neighbors(u)) {
      if (side[v] != 0 && keep(side[u], side[v])) ++count;
    }
    offsets[i + 1] = count;
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

  std::vector<Vertex> adjacency(offsets[k]);
#pragma omp parallel for schedule(dynamic, 256) num_threads(kernels::thread_count())
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(k); ++i) {
    const Vertex u = members[i];
    std::uint64_t pos = offsets[i];
    for (Vertex v : g.neighbors(u)) {
      if (side[v] != 0 && keep(side[u], side[v])) adjacency[pos++] = static_cast<Vertex>(local[v]);
    }
  }
  return {GraphAssembler::assemble(std::move(offsets), std::move(adjacency)), std::move(members)};
}

}  // namespace

std::vector<Vertex> identity_map(std::size_t n) {
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  return ids;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_subset(g, s);
  std::vector<std::uint8_t> side(g.order(), 0);
  for (Vertex v : s) side[v] = 1;
  return restrict_to(g, std::vector<Vertex>(s.begin(), s.end()), side,
                  [](std::uint8_t, std::uint8_t) { return true; });
}

Subgraph bipartite_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_subset(g, a);
  check_subset(g, b);
  std::vector<std::uint8_t> side(g.order(), 0);
  for (Vertex v : a) side[v] = 1;
  for (Vertex v : b) {
    if (side[v] != 0) throw Error(ErrorKind::overlapping_parts, "vertex " + std::to_string(v) + " in both parts");
    side[v] = 2;
  }
  std::vector<Vertex> members;
  members.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(members));
  return restrict_to(g, std::move(members), side, [](std::uint8_t su, std::uint8_t sv) { return su != sv; });
}

EdgeCounts edge_counts(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_subset(g, a);
  check_subset(g, b);
  const bool same = a == b;
  std::vector<std::uint8_t> side(g.order(), 0);
  for (Vertex v : a) side[v] |= 1;
  for (Vertex v : b) side[v] |= 2;
  if (!same) {
    for (Vertex v : b) {
      if (side[v] == 3) throw Error(ErrorKind::partial_overlap, "vertex " + std::to_string(v) + " in both sets");
    }
  }
  EdgeCounts c;
  for (Vertex u : a) {
    for (Vertex v : g.neighbors(u)) {
      if (v > u && (side[v] & 1)) ++c.inside_a;
      if (!same && (side[v] & 2)) ++c.between;
    }
  }
  if (same) return {c.inside_a, c.inside_a, c.inside_a};
  for (Vertex u : b) {
    for (Vertex v : g.neighbors(u)) {
      if (v > u && (side[v] & 2)) ++c.inside_b;
    }
  }
  return c;
}

DegreeStats degree_stats(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::empty_graph, "degree statistics need n >= 1");
  DegreeStats s;
  s.delta_min = g.degree(0);
  for (Vertex v = 0; v < n; ++v) {
    s.delta_max = std::max(s.delta_max, g.degree(v));
    s.delta_min = std::min(s.delta_min, g.degree(v));
  }
  const std::uint64_t num = 2 * g.size();
  const std::uint64_t den = n;
  const std::uint64_t d = std::gcd(num, den);
  s.avg_numerator = num / d;
  s.avg_denominator = den / d;
  s.d_avg = static_cast<double>(num) / static_cast<double>(den);
  return s;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    out.push_back(VertexSet::from_unsorted(std::move(comp)));
  }
  return out;
}

VertexSet non_isolated(const Graph& g) {
  std::vector<Vertex> ids;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) ids.push_back(v);
  }
  return VertexSet::from_sorted(std::move(ids));
}

}  // namespace specreg
