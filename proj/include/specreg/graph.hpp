#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "specreg/error.hpp"

namespace specreg {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  bool operator==(const Edge&) const = default;
};

/// Sorted, duplicate-free list of vertex ids of some host graph.
class VertexSet {
 public:
  VertexSet() = default;

  /// Takes ids in any order; throws ParameterOutOfRange on duplicates.
  static VertexSet from_unsorted(std::vector<Vertex> ids);
  /// Takes ids already sorted and distinct; throws ParameterOutOfRange otherwise.
  static VertexSet from_sorted(std::vector<Vertex> ids);
  /// {0, 1, ..., n-1}
  static VertexSet range(std::size_t n);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(Vertex v) const noexcept;
  std::span<const Vertex> ids() const noexcept { return ids_; }
  Vertex operator[](std::size_t i) const noexcept { return ids_[i]; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {}
  std::vector<Vertex> ids_;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Vertices are 0..n-1. Each undirected edge appears twice in the adjacency
/// array; every neighbor list is sorted ascending with no loops or repeats.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::uint64_t size() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }
  std::span<const Vertex> adjacency() const noexcept { return adjacency_; }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edge_list() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphAssembler;
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Low-level constructor for code that already produces canonical adjacency
/// (sorted symmetric lists, no loops, no repeats). Not validated.
class GraphAssembler {
 public:
  static Graph assemble(std::vector<std::uint64_t> offsets, std::vector<Vertex> adjacency);
};

struct BuildWarnings {
  std::uint64_t duplicates_dropped = 0;
  std::uint64_t self_loops_dropped = 0;
};

struct LenientBuild {
  Graph graph;
  BuildWarnings warnings;
};

/// Strict construction: throws SelfLoop, DuplicateEdge or VertexOutOfRange.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
/// Drops loops and repeated edges, counting them. Still throws VertexOutOfRange.
LenientBuild build_graph_lenient(std::size_t n, std::span<const Edge> edges);

/// A subgraph together with its order-preserving new -> host vertex map.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> host_ids;

  /// Host id of local vertex v.
  Vertex host(Vertex v) const noexcept { return host_ids[v]; }
};

/// 0, 1, ..., n-1
std::vector<Vertex> identity_map(std::size_t n);

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Vertex set A u B keeping only the A-B crossing edges.
Subgraph bipartite_between(const Graph& g, const VertexSet& a, const VertexSet& b);

struct EdgeCounts {
  std::uint64_t inside_a = 0;
  std::uint64_t inside_b = 0;
  std::uint64_t between = 0;
  bool operator==(const EdgeCounts&) const = default;
};

/// (e(A), e(B), e(A,B)). A and B must be disjoint or identical; for A == B all
/// three fields equal e(A).
EdgeCounts edge_counts(const Graph& g, const VertexSet& a, const VertexSet& b);

struct DegreeStats {
  std::size_t delta_max = 0;
  std::size_t delta_min = 0;
  /// Average degree 2m/n as a reduced fraction.
  std::uint64_t avg_numerator = 0;
  std::uint64_t avg_denominator = 1;
  double d_avg = 0.0;
};

DegreeStats degree_stats(const Graph& g);

/// Connected components ordered by their smallest vertex id.
std::vector<VertexSet> connected_components(const Graph& g);

/// Vertices of positive degree.
VertexSet non_isolated(const Graph& g);

}  // namespace specreg
