#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srcsel/bench.hpp"
#include "srcsel/eval.hpp"
#include "srcsel/fmt.hpp"
#include "srcsel/report.hpp"
#include "srcsel/selection.hpp"
#include "srcsel/synth.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct GenFlags {
  std::uint32_t sources = 1000;
  std::uint32_t items = 0;
  std::uint32_t wrong_values = 4;
  double mu = 100.0;
  double sigma = 0.0;
  double error = 0.2;
  std::uint64_t seed = 1;
};

struct SelectFlags {
  std::string claims, costs, query, golden, out;
  std::string objective = "mincost";
  std::string prune = "none";
  std::optional<double> budget;
  std::optional<double> rho;
  bool reference_kernel = false;
};

struct EvalFlags {
  std::string claims, costs, query, golden, out;
  std::vector<std::string> sources;
  std::string selected_file;
};

struct BenchFlags {
  GenFlags gen;
  std::string sweep = "sources";
  std::vector<double> values;
  std::string objective = "mincost";
  std::optional<double> budget;
  double rho = 0.9;
  bool parallel_cells = false;
  std::string out;
};

srcsel::SyntheticConfig to_synth_config(const GenFlags& g) {
  srcsel::SyntheticConfig sc;
  sc.sources = g.sources;
  sc.items = g.items;
  sc.wrong_values = g.wrong_values;
  sc.mu = g.mu;
  sc.sigma = g.sigma;
  sc.error_mean_fraction = g.error;
  sc.seed = g.seed;
  sc.claim_cap = srcsel::claim_cap_from_env();
  return sc;
}

void add_gen_flags(CLI::App* cmd, GenFlags& g) {
  cmd->add_option("--sources", g.sources, "Number of sources");
  cmd->add_option("--items", g.items, "Number of items (0 derives 2*mu)");
  cmd->add_option("--values", g.wrong_values, "Wrong values per item beside the golden one");
  cmd->add_option("--mu", g.mu, "Mean claims per source");
  cmd->add_option("--sigma", g.sigma, "Stddev of claims per source (0 derives mu/3)");
  cmd->add_option("--error", g.error, "Mean fraction of erroneous claims per source");
  cmd->add_option("--seed", g.seed, "Generator seed");
}

srcsel::Objective parse_objective(const std::string& name) {
  return name == "maxcontrib" ? srcsel::Objective::max_contribution
                              : srcsel::Objective::min_cost;
}

// Shared by select and eval: ingest, resolve the query, build the index.
struct LoadedProblem {
  srcsel::SourceCatalog catalog;
  srcsel::CoverageIndex index;
  std::vector<std::string> warnings;
};

LoadedProblem load_problem(const std::string& claims, const std::string& costs,
                           const std::string& query) {
  LoadedProblem lp;
  lp.catalog = srcsel::ingest_claims(claims, costs);
  lp.warnings = lp.catalog.warnings();
  srcsel::QueryInfo qi;
  if (query.empty()) {
    qi = srcsel::full_query(lp.catalog);
  } else {
    qi = srcsel::resolve_query(lp.catalog, srcsel::load_query(query));
    for (const std::string& id : qi.missing) {
      lp.warnings.push_back("query item " + id + " is not in the catalog");
    }
  }
  lp.index = srcsel::build_index(lp.catalog, qi);
  return lp;
}

int run_gen(const GenFlags& flags, const std::string& prefix) {
  const srcsel::Dataset ds = srcsel::generate_dataset(to_synth_config(flags));
  srcsel::write_dataset(ds, prefix);
  std::cout << "sources " << ds.catalog.source_count() << "  items " << ds.catalog.item_count()
            << "  claims " << ds.total_claims << "  wrong " << ds.wrong_claims << '\n'
            << "wrote " << prefix << ".claims.csv, " << prefix << ".costs.csv, " << prefix
            << ".golden.csv\n";
  return 0;
}

int run_select(const SelectFlags& flags) {
  LoadedProblem lp = load_problem(flags.claims, flags.costs, flags.query);

  srcsel::SelectionConfig cfg;
  cfg.objective = parse_objective(flags.objective);
  cfg.budget = flags.budget;
  cfg.source_prune = flags.prune == "source" || flags.prune == "both";
  if (flags.prune == "value" || flags.prune == "both") cfg.rho = flags.rho;
  cfg.use_reference_kernel = flags.reference_kernel;

  const srcsel::SelectionReport rep = srcsel::run_selection(lp.index, lp.catalog, cfg);

  std::optional<srcsel::MetricResult> metrics;
  if (!flags.golden.empty()) {
    metrics = srcsel::evaluate(lp.index, lp.catalog, srcsel::load_golden(flags.golden),
                               rep.selected);
  }

  srcsel::ReportInputs inputs{rep, lp.catalog, metrics ? &*metrics : nullptr,
                              std::move(lp.warnings),
                              {{"query_items", std::to_string(lp.index.query_items().size())}}};
  std::cout << srcsel::render_text(inputs);
  if (!flags.out.empty()) srcsel::write_file(flags.out, srcsel::render_kv(inputs));
  return 0;
}

int run_eval(const EvalFlags& flags) {
  LoadedProblem lp = load_problem(flags.claims, flags.costs, flags.query);

  std::vector<std::string> ids = flags.sources;
  if (!flags.selected_file.empty()) {
    const std::vector<std::string> more = srcsel::load_query(flags.selected_file);
    ids.insert(ids.end(), more.begin(), more.end());
  }
  std::vector<srcsel::SourceIdx> selected;
  for (const std::string& id : ids) {
    const auto s = lp.catalog.find_source(id);
    if (!s) throw std::runtime_error("selected source " + id + " is not in the catalog");
    selected.push_back(*s);
  }

  const srcsel::MetricResult m = srcsel::evaluate(
      lp.index, lp.catalog, srcsel::load_golden(flags.golden), selected);

  auto opt = [](const std::optional<double>& v) {
    return v ? srcsel::fmt_double(*v) : std::string("null");
  };
  std::cout << "precision " << opt(m.precision) << " (" << m.pairs_true << "/" << m.pairs_total
            << ")  recall " << opt(m.recall) << " (" << m.golden_hit << "/" << m.golden_total
            << ")\n";
  for (const std::string& w : lp.warnings) std::cout << "warning: " << w << '\n';
  for (const std::string& w : m.warnings) std::cout << "warning: " << w << '\n';

  if (!flags.out.empty()) {
    std::string kv = "schema=srcsel.eval.v1\n";
    kv += "selected_count=" + std::to_string(selected.size()) + '\n';
    for (const std::string& w : lp.warnings) kv += "warning=" + w + '\n';
    for (const std::string& w : m.warnings) kv += "warning=" + w + '\n';
    kv += "precision=" + opt(m.precision) + '\n';
    kv += "recall=" + opt(m.recall) + '\n';
    kv += "pairs_true=" + std::to_string(m.pairs_true) + '\n';
    kv += "pairs_total=" + std::to_string(m.pairs_total) + '\n';
    kv += "golden_hit=" + std::to_string(m.golden_hit) + '\n';
    kv += "golden_total=" + std::to_string(m.golden_total) + '\n';
    srcsel::write_file(flags.out, kv);
  }
  return 0;
}

int run_bench_cmd(const BenchFlags& flags) {
  srcsel::BenchConfig cfg;
  cfg.base = to_synth_config(flags.gen);
  const auto axis = srcsel::bench_axis_from_name(flags.sweep);
  if (!axis) throw std::invalid_argument("unknown sweep axis: " + flags.sweep);
  cfg.axis = *axis;
  cfg.values = flags.values;
  cfg.objective = parse_objective(flags.objective);
  cfg.budget = flags.budget;
  cfg.rho = flags.rho;
  cfg.parallel_cells = flags.parallel_cells;

  const std::string tsv = srcsel::render_bench_tsv(srcsel::run_bench(cfg));
  if (flags.out.empty()) {
    std::cout << tsv;
  } else {
    srcsel::write_file(flags.out, tsv);
    std::cout << "wrote " << flags.out << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy source selection over probabilistic coverage"};
  app.require_subcommand(1);

  GenFlags gen;
  std::string gen_prefix = "synth";
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a synthetic claim corpus");
  add_gen_flags(gen_cmd, gen);
  gen_cmd->add_option("--out", gen_prefix, "Output path prefix");

  SelectFlags sel;
  CLI::App* sel_cmd = app.add_subcommand("select", "Run greedy selection over a claim corpus");
  sel_cmd->add_option("--claims", sel.claims, "Claims CSV (source,item,value,prob)")->required();
  sel_cmd->add_option("--costs", sel.costs, "Costs CSV (source,cost); missing sources cost 1");
  sel_cmd->add_option("--query", sel.query, "Query items, one per line; default is every item");
  sel_cmd->add_option("--golden", sel.golden, "Golden CSV (item,value) to score the selection");
  sel_cmd->add_option("--out", sel.out, "Write the machine-readable report here");
  sel_cmd->add_option("--objective", sel.objective, "Objective")
      ->check(CLI::IsMember({"mincost", "maxcontrib"}));
  sel_cmd->add_option("--budget", sel.budget, "Cost budget (maxcontrib only)");
  sel_cmd->add_option("--prune", sel.prune, "Pruning levels")
      ->check(CLI::IsMember({"none", "value", "source", "both"}));
  sel_cmd->add_option("--rho", sel.rho, "Retention target in (0,1] for value pruning");
  sel_cmd->add_flag("--reference-kernel", sel.reference_kernel,
                    "Score with the serial reference kernel");

  EvalFlags ev;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Score a source set against a golden standard");
  eval_cmd->add_option("--claims", ev.claims, "Claims CSV")->required();
  eval_cmd->add_option("--costs", ev.costs, "Costs CSV");
  eval_cmd->add_option("--query", ev.query, "Query items, one per line");
  eval_cmd->add_option("--golden", ev.golden, "Golden CSV (item,value)")->required();
  eval_cmd->add_option("--sources", ev.sources, "Selected source ids")->delimiter(',');
  eval_cmd->add_option("--selected-file", ev.selected_file, "Selected source ids, one per line");
  eval_cmd->add_option("--out", ev.out, "Write metrics as key=value here");

  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Sweep strategies over synthetic corpora");
  add_gen_flags(bench_cmd, bench.gen);
  bench_cmd->add_option("--sweep", bench.sweep, "Axis: sources, items, rho, error")->required();
  bench_cmd->add_option("--sweep-values", bench.values, "Axis values")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--objective", bench.objective, "Objective")
      ->check(CLI::IsMember({"mincost", "maxcontrib"}));
  bench_cmd->add_option("--budget", bench.budget, "Cost budget (maxcontrib only)");
  bench_cmd->add_option("--rho", bench.rho, "Retention target for the +V strategies");
  bench_cmd->add_flag("--parallel-cells", bench.parallel_cells, "One OpenMP task per axis value");
  bench_cmd->add_option("--out", bench.out, "Write the TSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sel_cmd) {
      const bool maxcontrib = sel.objective == "maxcontrib";
      if (maxcontrib && !sel.budget) {
        throw std::invalid_argument("--objective maxcontrib requires --budget");
      }
      if (!maxcontrib && sel.budget) {
        throw std::invalid_argument("--budget needs --objective maxcontrib");
      }
      const bool value_prune = sel.prune == "value" || sel.prune == "both";
      if (value_prune && !sel.rho) {
        throw std::invalid_argument("--prune " + sel.prune + " requires --rho");
      }
      if (!value_prune && sel.rho) {
        throw std::invalid_argument("--rho needs --prune value or both");
      }
      if (sel.rho) srcsel::derive_value_threshold(*sel.rho);
      return run_select(sel);
    }
    if (*eval_cmd) {
      if (ev.sources.empty() && ev.selected_file.empty()) {
        throw std::invalid_argument("eval needs --sources or --selected-file");
      }
      return run_eval(ev);
    }
    if (*bench_cmd) {
      const bool maxcontrib = bench.objective == "maxcontrib";
      if (maxcontrib && !bench.budget) {
        throw std::invalid_argument("--objective maxcontrib requires --budget");
      }
      if (!maxcontrib && bench.budget) {
        throw std::invalid_argument("--budget needs --objective maxcontrib");
      }
      srcsel::derive_value_threshold(bench.rho);
      return run_bench_cmd(bench);
    }
    return run_gen(gen, gen_prefix);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}
