#include "infobs/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "infobs/errors.hpp"
#include "infobs/witnesses.hpp"

namespace infobs {

namespace {

void require_exponent(std::size_t n) {
  if (n > 62) throw InputError("bound exponent too large: " + std::to_string(n));
}

}  // namespace

std::uint64_t lower_bound_states(std::size_t n) {
  require_exponent(n);
  // ⌈3·2ⁿ/4⌉ = ⌊(3·2ⁿ + 3)/4⌋
  return ((std::uint64_t{3} << n) + 3) / 4 - 1;
}

std::uint64_t upper_bound_states(std::size_t n) {
  require_exponent(n);
  return (std::uint64_t{1} << n) + 1;
}

bool ReportRow::within_upper_bound() const { return stats.final_states <= upper_bound(); }

bool ReportRow::within_bounds() const { return lower_bound() <= stats.final_states && within_upper_bound(); }

bool ComplexityReport::all_within_bounds() const {
  for (const auto& row : rows)
    if (!row.within_bounds()) return false;
  return true;
}

std::string csv_header() {
  return "n,input_states,gh_nfa_states,subset_states,marked_subsets,final_states,lower_bound,upper_bound,wall_ms";
}

std::string csv_row(const ReportRow& row) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", row.wall_ms);
  std::ostringstream out;
  out << row.n << ',' << row.stats.input_states << ',' << row.stats.gh_nfa_states << ',' << row.stats.subset_states
      << ',' << row.stats.marked_subsets << ',' << row.stats.final_states << ',' << row.lower_bound() << ','
      << row.upper_bound() << ',' << ms;
  return out.str();
}

std::string ComplexityReport::to_csv() const {
  std::string out = csv_header() + "\n";
  for (const auto& row : rows) out += csv_row(row) + "\n";
  return out;
}

ReportRow run_lower_bound_instance(std::size_t n) {
  const Dfa k = gen_lower_bound(n);
  const Mask projection = make_projection(k.alphabet(), {"a", "b"});
  const auto start = std::chrono::steady_clock::now();
  InfOResult result = inf_o(k, projection);
  const auto stop = std::chrono::steady_clock::now();
  ReportRow row;
  row.n = n;
  row.stats = result.stats;
  row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

}  // namespace infobs
