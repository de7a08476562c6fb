#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "specreg/graph.hpp"

namespace specreg {

/// Edge-list text format.
///
///   # n=<n> m=<m>      optional header, first line only; fixes the vertex count
///   # anything         comment
///   u v                one undirected edge per line, 0-based, whitespace separated
///
/// Without a header or an explicit n the vertex count is 1 + the largest id.
struct EdgeListOptions {
  std::optional<std::size_t> n;
  bool lenient = false;
};

struct ParsedGraph {
  Graph graph;
  BuildWarnings warnings;
};

/// Throws ParseError for malformed lines and LineError for graph validation
/// failures (self-loop, duplicate edge, id out of range), both with the line number.
ParsedGraph parse_edge_list(std::istream& in, const EdgeListOptions& opts = {});
ParsedGraph parse_edge_list(std::string_view text, const EdgeListOptions& opts = {});

/// Canonical form: header line, then edges u < v in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace specreg
