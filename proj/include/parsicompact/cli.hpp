#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "parsicompact/charmatrix.hpp"
#include "parsicompact/search.hpp"

namespace parsicompact {

// One benchmark measurement, or the mean of several. Column names follow the
// TSV header written by `parsicompact bench`.
struct BenchRow {
  std::size_t n = 0;
  double mtea_time_ms = 0.0;
  double cteeca_time_ms = 0.0;
  double compact_mixed_mp_trees = 0.0;
  double cubic_mp_trees = 0.0;
  double contracted_cubic_mp_trees_raw = 0.0;
  double contracted_cubic_mp_trees_dedup = 0.0;
  double mean_contractions = 0.0;
  double mp_cost = 0.0;
  // Both pipelines returned the same cost and the same set of trees.
  bool agree = true;
};

inline constexpr const char* kBenchColumns[] = {
    "n",          "mtea_time_ms",
    "cteeca_time_ms", "compact_mixed_mp_trees",
    "cubic_mp_trees", "contracted_cubic_mp_trees_raw",
    "contracted_cubic_mp_trees_dedup", "mean_contractions",
    "mp_cost",
};

// Runs the mixed-tree enumeration and the cubic-then-contract pipeline on one
// matrix and times both with a monotonic clock.
BenchRow bench_trial(const CharacterMatrix& matrix, unsigned threads, SpeciesOrder order = SpeciesOrder::kInput);
BenchRow average_rows(std::span<const BenchRow> rows);

unsigned default_threads();

// Entry point of the command-line tool. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parsicompact
