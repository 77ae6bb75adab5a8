#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "infobs/inf.hpp"

namespace infobs {

/// ⌈3/4·2ⁿ⌉ - 1
std::uint64_t lower_bound_states(std::size_t n);
/// 2ⁿ + 1
std::uint64_t upper_bound_states(std::size_t n);

struct ReportRow {
  std::size_t n = 0;
  InfOStats stats;
  double wall_ms = 0.0;

  std::uint64_t lower_bound() const { return lower_bound_states(n); }
  std::uint64_t upper_bound() const { return upper_bound_states(n); }
  bool within_bounds() const;
  bool within_upper_bound() const;
};

struct ComplexityReport {
  std::vector<ReportRow> rows;

  bool all_within_bounds() const;
  std::string to_csv() const;
};

std::string csv_header();
std::string csv_row(const ReportRow& row);

/// Runs inf_o on gen_lower_bound(n) under the projection erasing c.
ReportRow run_lower_bound_instance(std::size_t n);

}  // namespace infobs
