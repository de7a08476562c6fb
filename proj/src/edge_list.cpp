#include "specreg/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace specreg {

namespace {

struct LineEdge {
  Edge e;
  std::uint64_t line;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::size_t skip_space(std::string_view s, std::size_t pos) {
  while (pos < s.size() && is_space(s[pos])) ++pos;
  return pos;
}

// Reads one unsigned id token starting at pos; advances pos past it.
Vertex read_id(std::string_view s, std::size_t& pos, std::uint64_t line) {
  const std::size_t start = pos;
  while (pos < s.size() && !is_space(s[pos])) ++pos;
  std::string_view tok = s.substr(start, pos - start);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec == std::errc::result_out_of_range ||
      (ec == std::errc() && value >= std::numeric_limits<Vertex>::max())) {
    throw ParseError(line, start + 1, "vertex id '" + std::string(tok) + "' too large");
  }
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, start + 1, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return static_cast<Vertex>(value);
}

// "# n=<n> m=<m>"; returns n when the line has exactly that shape.
std::optional<std::size_t> read_header(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::string hash, ntok, mtok, extra;
  if (!(in >> hash >> ntok >> mtok) || (in >> extra) || hash != "#") return std::nullopt;
  if (ntok.rfind("n=", 0) != 0 || mtok.rfind("m=", 0) != 0) return std::nullopt;
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(ntok.data() + 2, ntok.data() + ntok.size(), n);
  if (ec != std::errc() || ptr != ntok.data() + ntok.size()) return std::nullopt;
  return static_cast<std::size_t>(n);
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in, const EdgeListOptions& opts) {
  std::vector<LineEdge> edges;
  std::optional<std::size_t> header_n;
  std::string raw;
  std::uint64_t line = 0;
  std::uint64_t max_id_plus_one = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    std::size_t pos = skip_space(s, 0);
    if (pos == s.size()) continue;
    if (s[pos] == '#') {
      if (line == 1) header_n = read_header(s);
      continue;
    }
    const Vertex u = read_id(s, pos, line);
    pos = skip_space(s, pos);
    if (pos == s.size()) throw ParseError(line, pos + 1, "expected a second vertex id");
    const Vertex v = read_id(s, pos, line);
    pos = skip_space(s, pos);
    if (pos != s.size()) throw ParseError(line, pos + 1, "unexpected trailing token");
    if (u == v && !opts.lenient) {
      throw LineError(ErrorKind::self_loop, line, "self-loop at vertex " + std::to_string(u));
    }
    max_id_plus_one = std::max<std::uint64_t>(max_id_plus_one, std::max(u, v) + std::uint64_t{1});
    edges.push_back({{std::min(u, v), std::max(u, v)}, line});
  }

  const std::size_t n = opts.n ? *opts.n : header_n ? *header_n : max_id_plus_one;
  for (const auto& le : edges) {
    if (le.e.v >= n) {
      throw LineError(ErrorKind::vertex_out_of_range, le.line,
                      "vertex " + std::to_string(le.e.v) + " with n = " + std::to_string(n));
    }
  }

  std::vector<Edge> plain;
  plain.reserve(edges.size());
  if (!opts.lenient) {
    std::vector<LineEdge> sorted = edges;
    std::sort(sorted.begin(), sorted.end(), [](const LineEdge& a, const LineEdge& b) {
      if (a.e.u != b.e.u) return a.e.u < b.e.u;
      if (a.e.v != b.e.v) return a.e.v < b.e.v;
      return a.line < b.line;
    });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i].e == sorted[i - 1].e) {
        throw LineError(ErrorKind::duplicate_edge, sorted[i].line,
                        "edge (" + std::to_string(sorted[i].e.u) + ", " + std::to_string(sorted[i].e.v) +
                            ") repeats line " + std::to_string(sorted[i - 1].line));
      }
    }
    for (const auto& le : edges) plain.push_back(le.e);
    return {build_graph(n, plain), {}};
  }
  for (const auto& le : edges) plain.push_back(le.e);
  auto built = build_graph_lenient(n, plain);
  return {std::move(built.graph), built.warnings};
}

ParsedGraph parse_edge_list(std::string_view text, const EdgeListOptions& opts) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, opts);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n=" << g.order() << " m=" << g.size() << '\n';
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v > u) out << u << ' ' << v << '\n';
    }
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace specreg
