#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace specreg {

/// Every failure the library reports, one tag per documented error.
enum class ErrorKind {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  overlapping_parts,
  partial_overlap,
  empty_graph,
  parameter_out_of_range,
  no_edges,
  not_converged,
  dimension_mismatch,
  not_unit,
  too_large,
  overflow,
  too_few_vertices,
  wrong_type,
  case3_witness_missing,
  hypothesis_not_met,
  collapsed,
  parse_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// what() without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

/// Parse failure with a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::uint64_t line, std::uint64_t column, const std::string& reason)
      : Error(ErrorKind::parse_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
        line_(line),
        column_(column),
        reason_(reason) {}

  std::uint64_t line() const noexcept { return line_; }
  std::uint64_t column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::uint64_t line_;
  std::uint64_t column_;
  std::string reason_;
};

/// A graph-validation error raised while reading a text stream; carries the offending line.
class LineError : public Error {
 public:
  LineError(ErrorKind kind, std::uint64_t line, const std::string& what)
      : Error(kind, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::uint64_t line() const noexcept { return line_; }

 private:
  std::uint64_t line_;
};

}  // namespace specreg
