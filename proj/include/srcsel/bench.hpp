#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srcsel/selection.hpp"
#include "srcsel/synth.hpp"

namespace srcsel {

enum class BenchAxis { sources, items, rho, error };

const char* bench_axis_name(BenchAxis a);
std::optional<BenchAxis> bench_axis_from_name(std::string_view name);

// One sweep: for every value on the axis, run the four strategy variants over
// a synthetic dataset and score them against its golden standard.
//
//   Basic      eager rounds, no pruning
//   Basic+S    lazy rounds with cached source bounds
//   Basic+V    value pruning at rho
//   Basic+S+V  both
//
// Non-rho axes regenerate the dataset per value with a seed derived from
// (seed, value position); the rho axis sweeps the retention target over one
// fixed dataset. Rows come back in (value, strategy) order regardless of
// parallel_cells.
struct BenchConfig {
  SyntheticConfig base;
  BenchAxis axis = BenchAxis::sources;
  std::vector<double> values;
  Objective objective = Objective::min_cost;
  std::optional<double> budget;  // required for max_contribution
  double rho = 0.9;              // retention for the +V strategies on non-rho axes
  bool parallel_cells = false;   // one OpenMP task per axis value
};

struct BenchRow {
  BenchAxis axis;
  double value = 0;
  std::string strategy;
  std::uint64_t rounds = 0;
  std::uint64_t selected_count = 0;
  double final_cost = 0;
  double final_cov = 0;
  std::optional<double> precision;
  std::optional<double> recall;
  std::uint64_t scored_total = 0;
  std::uint64_t skipped_total = 0;
  std::uint64_t entries = 0;
  std::uint64_t entries_pruned = 0;
  double time_ms = 0;  // prune + selection, excludes generation and indexing
};

std::vector<BenchRow> run_bench(const BenchConfig& cfg);

// Tab-separated table with a header row; time_ms is the last column so
// determinism comparisons can drop it.
std::string render_bench_tsv(std::span<const BenchRow> rows);

}  // namespace srcsel
