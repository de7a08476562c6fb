#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specreg/decompose.hpp"
#include "specreg/generators.hpp"
#include "specreg/regularize.hpp"

namespace specreg {

/// Grid of pipeline runs: every (n, eps, c) combination, `repetitions` times.
/// Cell i (n outermost, repetition innermost) uses generator seed seed_base + i.
struct SweepSpec {
  GenSpec generator;
  std::vector<std::size_t> n_values;
  std::vector<double> eps_values;
  std::vector<double> c_values;
  std::uint64_t repetitions = 1;
  std::uint64_t seed_base = 0;
  std::optional<std::uint64_t> p_override;
  bool force = false;
  RegularizeParams regularize;
  SolverConfig solver;
  std::string output_path;

  void validate() const;
  std::size_t cell_count() const noexcept;
};

struct SweepRow {
  std::size_t cell = 0;
  std::string family;
  std::size_t n = 0;
  double eps = 0.0;
  double c = 0.0;
  std::uint64_t rep = 0;
  std::uint64_t seed = 0;
  /// "ok", or the error kind of a failed cell.
  std::string status = "ok";
  std::string error;
  std::uint64_t input_m = 0;
  std::optional<double> lambda;
  std::optional<bool> hypothesis_met;
  std::optional<std::uint64_t> k;
  std::string termination;
  std::optional<std::size_t> decompose_n;
  std::optional<std::size_t> n_prime;
  std::optional<std::uint64_t> e_prime;
  std::optional<double> K_achieved;
  std::optional<double> c_prime;
  std::optional<bool> order_pass;
  std::optional<bool> density_pass;
  std::optional<bool> enforced;
  std::uint64_t violations = 0;
};

/// Runs all cells (possibly concurrently) and returns rows in cell order.
/// Per-cell failures are recorded in the row.
std::vector<SweepRow> sweep(const SweepSpec& spec);

extern const char* const kSweepColumns;
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace specreg
