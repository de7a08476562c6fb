#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "specreg/graph.hpp"

namespace specreg {

enum class Family { complete, complete_bipartite, star, path, cycle, subdivided_star, gnp, gnm };

std::string_view to_string(Family f) noexcept;
/// Throws ParameterOutOfRange for unknown names.
Family family_from_string(std::string_view name);

/// Generator request, also the JSON object {"family", "n", "a", "b", "xi", "p", "m", "seed"}.
///
/// `n` is always the vertex count. complete_bipartite takes either (a, b) or
/// (n, xi) with a = ceil(n^{2 xi}), b = n - a.
struct GenSpec {
  Family family = Family::complete;
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::optional<double> xi;
  double probability = 0.0;
  std::uint64_t edges = 0;
  std::uint64_t seed = 0;

  void validate() const;
};

Graph generate(const GenSpec& spec);

/// ceil(n^{2 xi}), snapping to an integer when within 1e-9 relative of one.
std::size_t star_part_size(std::size_t n, double xi);

/// S_n^xi: the star K_{1, s-1} (s = ceil(n^{2 xi})) with one edge subdivided
/// n - s times. Center is 0, leaves 1..s-1; the subdivided edge is (0, s-1)
/// and its internal vertices are s..n-1 in path order starting at the center.
Graph subdivided_star(std::size_t n, double xi);

/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);

Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// K_{1,leaves}, center 0.
Graph star(std::size_t leaves);

/// G(n, p): each pair u < v, in lexicographic order, draws one 53-bit uniform
/// from mt19937_64(seed) and is an edge when the draw is below p.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// G(n, m): uniform pairs from mt19937_64(seed) by rejection, unbiased bounded
/// integers; when m exceeds half the pairs the complement is sampled instead.
Graph gnm(std::size_t n, std::uint64_t m, std::uint64_t seed);

}  // namespace specreg
