#include "srcsel/bench.hpp"

#include <cmath>
#include <stdexcept>

#include "srcsel/eval.hpp"
#include "srcsel/fmt.hpp"

namespace srcsel {

namespace {

struct Strategy {
  const char* name;
  bool source_prune;
  bool value_prune;
};

constexpr Strategy kStrategies[] = {
    {"Basic", false, false},
    {"Basic+S", true, false},
    {"Basic+V", false, true},
    {"Basic+S+V", true, true},
};

SyntheticConfig cell_config(const BenchConfig& cfg, std::size_t vi, double value) {
  SyntheticConfig sc = cfg.base;
  if (cfg.axis != BenchAxis::rho) {
    std::uint64_t state = cfg.base.seed + vi;
    sc.seed = splitmix64(state);
  }
  switch (cfg.axis) {
    case BenchAxis::sources:
      sc.sources = static_cast<std::uint32_t>(std::llround(value));
      break;
    case BenchAxis::items:
      sc.items = static_cast<std::uint32_t>(std::llround(value));
      break;
    case BenchAxis::error:
      sc.error_mean_fraction = value;
      break;
    case BenchAxis::rho:
      break;
  }
  return sc;
}

void run_cell(const BenchConfig& cfg, const Dataset& ds, double value,
              std::span<BenchRow> out_rows) {
  CoverageIndex ix = build_index(ds.catalog, full_query(ds.catalog));
  for (std::size_t k = 0; k < std::size(kStrategies); ++k) {
    const Strategy& st = kStrategies[k];
    SelectionConfig sel;
    sel.objective = cfg.objective;
    sel.budget = cfg.budget;
    sel.source_prune = st.source_prune;
    if (st.value_prune) sel.rho = cfg.axis == BenchAxis::rho ? value : cfg.rho;

    const SelectionReport rep = run_selection(ix, ds.catalog, sel);
    const MetricResult m = evaluate(ix, ds.catalog, ds.golden, rep.selected);

    BenchRow& row = out_rows[k];
    row.axis = cfg.axis;
    row.value = value;
    row.strategy = st.name;
    row.rounds = rep.rounds.size();
    row.selected_count = rep.selected.size();
    row.final_cost = rep.final_cost;
    row.final_cov = rep.final_cov;
    row.precision = m.precision;
    row.recall = m.recall;
    for (const RoundRecord& r : rep.rounds) {
      row.scored_total += r.scored;
      row.skipped_total += r.skipped;
    }
    row.entries = rep.entries;
    row.entries_pruned = rep.entries_pruned;
    row.time_ms = rep.prune_ms + rep.select_ms;
  }
}

}  // namespace

const char* bench_axis_name(BenchAxis a) {
  switch (a) {
    case BenchAxis::sources: return "sources";
    case BenchAxis::items: return "items";
    case BenchAxis::rho: return "rho";
    case BenchAxis::error: return "error";
  }
  return "?";
}

std::optional<BenchAxis> bench_axis_from_name(std::string_view name) {
  if (name == "sources") return BenchAxis::sources;
  if (name == "items") return BenchAxis::items;
  if (name == "rho") return BenchAxis::rho;
  if (name == "error") return BenchAxis::error;
  return std::nullopt;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (cfg.values.empty()) throw std::invalid_argument("bench needs at least one axis value");
  if (cfg.objective == Objective::max_contribution && !cfg.budget) {
    throw std::invalid_argument("max_contribution requires a budget");
  }
  if (cfg.axis == BenchAxis::rho) {
    for (double v : cfg.values) derive_value_threshold(v);  // validate up front
  }

  const std::size_t n_strategies = std::size(kStrategies);
  std::vector<BenchRow> rows(cfg.values.size() * n_strategies);

  if (cfg.axis == BenchAxis::rho) {
    // One dataset, swept only by the retention target.
    const Dataset ds = generate_dataset(cfg.base);
#pragma omp parallel for schedule(dynamic, 1) if (cfg.parallel_cells)
    for (std::size_t vi = 0; vi < cfg.values.size(); ++vi) {
      run_cell(cfg, ds, cfg.values[vi],
               std::span<BenchRow>(rows.data() + vi * n_strategies, n_strategies));
    }
  } else {
#pragma omp parallel for schedule(dynamic, 1) if (cfg.parallel_cells)
    for (std::size_t vi = 0; vi < cfg.values.size(); ++vi) {
      const Dataset ds = generate_dataset(cell_config(cfg, vi, cfg.values[vi]));
      run_cell(cfg, ds, cfg.values[vi],
               std::span<BenchRow>(rows.data() + vi * n_strategies, n_strategies));
    }
  }
  return rows;
}

std::string render_bench_tsv(std::span<const BenchRow> rows) {
  std::string out =
      "axis\tvalue\tstrategy\trounds\tselected\tfinal_cost\tfinal_cov\tprecision\trecall\t"
      "scored\tskipped\tentries\tentries_pruned\ttime_ms\n";
  for (const BenchRow& r : rows) {
    out += bench_axis_name(r.axis);
    out += '\t';
    out += fmt_double(r.value);
    out += '\t';
    out += r.strategy;
    out += '\t';
    out += std::to_string(r.rounds);
    out += '\t';
    out += std::to_string(r.selected_count);
    out += '\t';
    out += fmt_double(r.final_cost);
    out += '\t';
    out += fmt_double(r.final_cov);
    out += '\t';
    out += r.precision ? fmt_double(*r.precision) : "null";
    out += '\t';
    out += r.recall ? fmt_double(*r.recall) : "null";
    out += '\t';
    out += std::to_string(r.scored_total);
    out += '\t';
    out += std::to_string(r.skipped_total);
    out += '\t';
    out += std::to_string(r.entries);
    out += '\t';
    out += std::to_string(r.entries_pruned);
    out += '\t';
    out += fmt_double(r.time_ms);
    out += '\n';
  }
  return out;
}

}  // namespace srcsel
