// Acceptance gate: one pass/fail line per criterion, exit code counts the
// failures. Tolerances and limits are pinned here on purpose; loosening them
// is a code change, not a flag.

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "srcsel/coverage.hpp"
#include "srcsel/eval.hpp"
#include "srcsel/fmt.hpp"
#include "srcsel/index.hpp"
#include "srcsel/pruning.hpp"
#include "srcsel/report.hpp"
#include "srcsel/selection.hpp"
#include "srcsel/synth.hpp"
#include "support/fixtures.hpp"
#include "support/random_instance.hpp"

using namespace srcsel;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;   // shown when passing
  std::string failure;  // first failed expectation

  void expect(bool cond, const std::string& why) {
    if (!cond && pass) {
      pass = false;
      failure = why;
    }
  }
};

bool near(double a, double b) { return std::abs(a - b) <= kTol; }

std::string fmt_secs(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << "s";
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------- criterion 1

Outcome worked_example_replay() {
  Outcome o;
  const SourceCatalog cat = fixtures::make_hq_catalog();
  CoverageIndex ix = fixtures::make_hq_index(cat);
  const SelectionReport rep = run_min_cost(ix, cat);
  const auto src = [&](const char* id) { return fixtures::hq_source(cat, id); };

  o.expect(rep.rounds.size() == 6, "expected a six-round run, got " +
                                       std::to_string(rep.rounds.size()));
  if (!o.pass) return o;

  o.expect(rep.rounds[0].source == src("S_1"), "round 1 must pick S_1");
  o.expect(near(rep.rounds[0].marginal, 3.64),
           "round 1 contribution " + fmt_double(rep.rounds[0].marginal) + " != 3.64");
  o.expect(rep.rounds[1].source == src("S_2"), "round 2 must pick S_2");
  o.expect(near(rep.rounds[1].marginal, 0.84),
           "round 2 contribution " + fmt_double(rep.rounds[1].marginal) + " != 0.84");

  const std::vector<SourceIdx> base = {src("S_1"), src("S_2")};
  const double c4 = marginal_of(ix, base, src("S_4"));
  const double c6 = marginal_of(ix, base, src("S_6"));
  const double c6_ie = marginal_inclusion_exclusion(ix, base, src("S_6"));
  o.expect(near(c4, 0.31), "contribution of S_4 after {S_1,S_2} is " + fmt_double(c4));
  o.expect(near(c6, 0.01), "contribution of S_6 after {S_1,S_2} is " + fmt_double(c6));
  o.expect(near(c6_ie, 0.01), "inclusion-exclusion gives " + fmt_double(c6_ie) + " for S_6");
  o.expect(near(rep.final_cov, 5.0) && near(rep.final_cost, 6.0),
           "full run must cover 5.00 at cost 6");

  o.detail = "rounds S_1/3.64 and S_2/0.84, contributions 0.31 and 0.01, all within 1e-9";
  return o;
}

// ---------------------------------------------------------------- criterion 2

Outcome contribution_referee() {
  Outcome o;
  std::uint64_t pairs = 0;
  double worst = 0.0;
  const int instances = 500;

  for (int n = 0; n < instances && o.pass; ++n) {
    fixtures::RandomSpec spec;  // max 8 sources, 6 items
    spec.allow_zero_prob = (n % 2) == 0;
    const fixtures::RandomInstance inst =
        fixtures::make_random_instance(2000 + static_cast<std::uint64_t>(n), spec);
    const CoverageIndex& ix = inst.index;
    const std::uint32_t n_src = static_cast<std::uint32_t>(inst.catalog.source_count());

    std::vector<SourceIdx> sel;
    for (std::uint32_t mask = 0; mask < (1u << n_src) && o.pass; ++mask) {
      if (std::popcount(mask) > 6) continue;
      sel.clear();
      for (std::uint32_t s = 0; s < n_src; ++s) {
        if (mask & (1u << s)) sel.push_back(s);
      }
      for (std::uint32_t s = 0; s < n_src; ++s) {
        if (mask & (1u << s)) continue;
        const double fast = marginal_of(ix, sel, s);
        const double referee = marginal_inclusion_exclusion(ix, sel, s);
        const double diff = std::abs(fast - referee);
        worst = std::max(worst, diff);
        ++pairs;
        o.expect(diff <= kTol, "instance " + std::to_string(n) + ": |" + fmt_double(fast) +
                                   " - " + fmt_double(referee) + "| = " + fmt_double(diff));
      }
    }
  }

  o.detail = std::to_string(instances) + " instances, " + std::to_string(pairs) +
             " (set, source) pairs, worst gap " + fmt_double(worst);
  return o;
}

// ---------------------------------------------------------------- criterion 3

// The pinned ceiling for the min-cost greedy is max(ln alpha, 1) x optimum.
// The classical guarantee for greedy set cover (unit or weighted costs) is the
// harmonic number H(alpha), which exceeds that ceiling for every alpha >= 2,
// so honestly drawn random instances can land in the gap; the scan therefore
// walks all instances, reports each offender with its full arithmetic, and
// checks the harmonic ceiling alongside, rather than stopping at the first
// violation. Picking seeds where the gap never shows would dress a lottery
// ticket up as a theorem.
Outcome approximation_bounds() {
  Outcome o;
  const int instances = 200;
  const fixtures::CostModel models[] = {fixtures::CostModel::unit, fixtures::CostModel::uniform,
                                        fixtures::CostModel::integers};
  const char* model_names[] = {"unit", "uniform", "integer"};
  double worst_cost_ratio = 0.0;
  double worst_cov_ratio = 2.0;
  bool within_harmonic = true;
  std::vector<int> offenders;
  std::string worst_case;
  double worst_excess = 0.0;

  for (int n = 0; n < instances && o.pass; ++n) {
    const std::uint64_t seed = 9000 + static_cast<std::uint64_t>(n);

    fixtures::RandomSpec spec;
    spec.max_sources = 12;
    spec.costs = models[n % 3];
    fixtures::RandomInstance inst = fixtures::make_random_instance(seed, spec);

    const SelectionReport greedy = run_min_cost(inst.index, inst.catalog);
    const OptimalResult opt =
        brute_force_optimal(inst.index, inst.catalog, Objective::min_cost);

    std::size_t alpha = 1;
    for (SourceIdx s : inst.index.candidates()) {
      alpha = std::max(alpha, inst.index.entries_of(s).size());
    }
    double harmonic = 0.0;
    for (std::size_t k = 1; k <= alpha; ++k) harmonic += 1.0 / static_cast<double>(k);
    const double factor = std::max(std::log(static_cast<double>(alpha)), 1.0);
    const double ratio = greedy.final_cost / opt.value;
    worst_cost_ratio = std::max(worst_cost_ratio, ratio);
    o.expect(greedy.final_cost >= opt.value - kTol,
             "instance " + std::to_string(n) + ": greedy undercut the exhaustive optimum");
    if (greedy.final_cost > factor * opt.value + kTol) {
      offenders.push_back(n);
      if (ratio > harmonic + kTol) within_harmonic = false;
      if (ratio / factor > worst_excess) {
        worst_excess = ratio / factor;
        worst_case = "instance " + std::to_string(n) + ", " + model_names[n % 3] +
                     " costs: greedy " + fmt_double(greedy.final_cost) + " vs optimum " +
                     fmt_double(opt.value) + ", alpha " + std::to_string(alpha) + ", ratio " +
                     fmt_double(ratio) + " > " + fmt_double(factor) + " but within H(alpha) " +
                     fmt_double(harmonic);
      }
    }

    fixtures::RandomSpec unit_spec;
    unit_spec.max_sources = 12;
    fixtures::RandomInstance uinst = fixtures::make_random_instance(seed + 70000, unit_spec);
    const double budget = 1.0 + static_cast<double>(n % 4);
    const SelectionReport g2 = run_max_contribution(uinst.index, uinst.catalog, budget);
    const OptimalResult opt2 =
        brute_force_optimal(uinst.index, uinst.catalog, Objective::max_contribution, budget);
    if (opt2.value > 0) {
      const double floor = (1.0 - 1.0 / std::exp(1.0)) * opt2.value;
      worst_cov_ratio = std::min(worst_cov_ratio, g2.final_cov / opt2.value);
      o.expect(g2.final_cov >= floor - kTol,
               "instance " + std::to_string(n) + ": greedy coverage " +
                   fmt_double(g2.final_cov) + " below (1-1/e) floor " + fmt_double(floor));
      o.expect(g2.final_cov <= opt2.value + kTol,
               "instance " + std::to_string(n) + ": greedy beat the exhaustive coverage");
    }
  }

  if (o.pass && !offenders.empty()) {
    o.pass = false;
    std::string msg = std::to_string(offenders.size()) + " of " + std::to_string(instances) +
                      " instances exceed the ln-alpha ceiling (worst: " + worst_case + ")";
    msg += within_harmonic
               ? "; all stay within the classical harmonic-number guarantee H(alpha), so the "
                 "simplified ln-alpha constant is what fails, not the greedy"
               : "; some exceed even H(alpha)";
    msg += "; offending instances:";
    for (std::size_t i = 0; i < offenders.size(); ++i) {
      msg += (i ? "," : " ") + std::to_string(offenders[i]);
    }
    o.failure = msg;
  }

  o.detail = std::to_string(instances) +
             " instances per objective, worst cost ratio " + fmt_double(worst_cost_ratio) +
             ", worst coverage fraction " + fmt_double(worst_cov_ratio) +
             " vs floor " + fmt_double(1.0 - 1.0 / std::exp(1.0));
  return o;
}

// ---------------------------------------------------------------- criterion 4

Outcome retention_guarantee() {
  Outcome o;

  {
    const SourceCatalog cat = fixtures::make_hq_catalog();
    CoverageIndex ix = fixtures::make_hq_index(cat);
    const PruneReport rep = prune_values(ix, 0.9);
    const ItemIdx ms = *cat.find_item("Microsoft");
    bool seen = false;
    for (const PrunedItem& pi : rep.items) {
      if (pi.item != ms) continue;
      seen = true;
      o.expect(pi.values.size() == 2 && near(pi.retention, 0.99),
               "at 0.9 the Microsoft prefix must drop TX and BJ and retain 0.99");
    }
    o.expect(seen, "at 0.9 Microsoft must lose values");

    ix.reset_pruned();
    const PruneReport rep93 = prune_values(ix, 0.93);
    const ItemIdx apple = *cat.find_item("Apple");
    seen = false;
    for (const PrunedItem& pi : rep93.items) {
      if (pi.item != apple) continue;
      seen = true;
      o.expect(pi.values.size() == 2 && near(pi.retention, 0.931),
               "at 0.93 the Apple prefix must drop NY and WA and retain 0.931");
    }
    o.expect(seen, "at 0.93 Apple must lose values");
  }

  std::uint64_t pruned_items = 0;
  for (std::uint64_t seed = 300; seed < 350 && o.pass; ++seed) {
    fixtures::RandomSpec spec;
    spec.max_values = 5;
    spec.allow_zero_prob = true;
    fixtures::RandomInstance inst = fixtures::make_random_instance(seed, spec);
    CoverageIndex& ix = inst.index;

    for (const double rho : {0.5, 0.6, 0.7, 0.8, 0.9}) {
      ix.reset_pruned();
      const PruneReport rep = prune_values(ix, rho);
      for (const PrunedItem& pi : rep.items) {
        ++pruned_items;
        double retention = 1.0;
        std::size_t kept = 0;
        const auto [begin, end] = ix.item_range(pi.item);
        for (std::size_t e = begin; e < end; ++e) {
          if (ix.pruned(e)) {
            retention *= 1.0 - ix.entry_prob(e);
          } else {
            ++kept;
          }
        }
        o.expect(std::abs(retention - pi.retention) <= 1e-12,
                 "reported retention drifts from the recomputed product");
        o.expect(retention >= rho - kTol,
                 "seed " + std::to_string(seed) + " rho " + fmt_double(rho) + ": retention " +
                     fmt_double(retention) + " fell below the target");
        o.expect(kept >= 1, "an item lost its every value");
      }
    }
  }

  o.detail = "worked prefixes at 0.9 and 0.93, then " + std::to_string(pruned_items) +
             " pruned items across the retention sweep, all >= rho - 1e-9";
  return o;
}

// ---------------------------------------------------------------- criterion 5

Outcome lazy_matches_eager() {
  Outcome o;
  const fixtures::CostModel models[] = {fixtures::CostModel::unit, fixtures::CostModel::uniform,
                                        fixtures::CostModel::integers};
  int total = 0;
  int with_skips = 0;

  auto compare = [&](CoverageIndex& ix, const SourceCatalog& cat, Objective objective,
                     std::optional<double> budget) {
    SelectionConfig eager_cfg;
    eager_cfg.objective = objective;
    eager_cfg.budget = budget;
    const SelectionReport eager = run_selection(ix, cat, eager_cfg);

    SelectionConfig lazy_cfg = eager_cfg;
    lazy_cfg.source_prune = true;
    const SelectionReport lazy = run_selection(ix, cat, lazy_cfg);

    o.expect(lazy.selected == eager.selected, "lazy and eager picked different sequences");
    o.expect(lazy.rounds.size() == eager.rounds.size(), "round counts diverged");
    std::uint64_t skipped = 0;
    for (std::size_t r = 0; r < std::min(lazy.rounds.size(), eager.rounds.size()); ++r) {
      o.expect(lazy.rounds[r].marginal == eager.rounds[r].marginal,
               "round contributions diverged bitwise");
      o.expect(lazy.rounds[r].scored + lazy.rounds[r].skipped == eager.rounds[r].scored,
               "scored plus skipped must equal the eager pool");
      skipped += lazy.rounds[r].skipped;
    }
    ++total;
    if (skipped > 0) ++with_skips;
  };

  for (std::uint64_t seed = 5000; seed < 5070 && o.pass; ++seed) {
    for (const fixtures::CostModel model : models) {
      fixtures::RandomSpec spec;
      spec.max_sources = 14;
      spec.max_items = 8;
      spec.max_values = 4;
      spec.costs = model;
      fixtures::RandomInstance inst = fixtures::make_random_instance(seed, spec);
      compare(inst.index, inst.catalog, Objective::min_cost, {});
      if (!o.pass) break;
    }
  }
  for (std::uint64_t seed = 5100; seed < 5140 && o.pass; ++seed) {
    fixtures::RandomSpec spec;
    spec.max_sources = 14;
    spec.max_items = 8;
    spec.max_values = 4;
    fixtures::RandomInstance inst = fixtures::make_random_instance(seed, spec);
    compare(inst.index, inst.catalog, Objective::max_contribution, 4.0);
  }

  o.expect(total >= 200, "only " + std::to_string(total) + " comparisons ran");
  o.expect(2 * with_skips >= total, "bound skipping fired on only " +
                                        std::to_string(with_skips) + " of " +
                                        std::to_string(total) + " runs");
  o.detail = std::to_string(total) + " runs identical to the eager reference, " +
             std::to_string(with_skips) + " of them with nonzero skips";
  return o;
}

// ---------------------------------------------------------------- criterion 6

Outcome scale_run() {
  Outcome o;

  SyntheticConfig sc;
  sc.sources = 1'000'000;
  sc.items = 2000;
  sc.mu = 20;
  sc.seed = 42;
  const Dataset ds = generate_dataset(sc);
  CoverageIndex ix = build_index(ds.catalog, full_query(ds.catalog));

  auto run = [&](bool source_prune, std::optional<double> rho) {
    SelectionConfig cfg;
    cfg.objective = Objective::max_contribution;
    cfg.budget = 40.0;
    cfg.source_prune = source_prune;
    cfg.rho = rho;
    return run_selection(ix, ds.catalog, cfg);
  };

  const SelectionReport basic = run(false, {});
  const SelectionReport s = run(true, {});
  const SelectionReport v = run(false, 0.9);
  const SelectionReport sv = run(true, 0.9);

  o.expect(basic.rounds.size() == 40, "the unpruned run must spend its whole budget");
  o.expect(s.selected == basic.selected, "source pruning changed the unvalued selection");
  o.expect(sv.selected == v.selected, "source pruning changed the value-pruned selection");
  o.expect(v.entries_pruned > 0, "value pruning trimmed nothing at rho 0.9");

  const std::size_t common_v = std::min(sv.rounds.size(), basic.rounds.size());
  for (std::size_t r = 0; r < common_v; ++r) {
    const std::uint64_t b = basic.rounds[r].scored;
    o.expect(s.rounds[r].scored <= b, "round " + std::to_string(r + 1) +
                                          ": source pruning scored more than the full scan");
    if (r < v.rounds.size()) {
      o.expect(v.rounds[r].scored <= b,
               "round " + std::to_string(r + 1) + ": value pruning grew the scan");
      o.expect(sv.rounds[r].scored <= v.rounds[r].scored,
               "round " + std::to_string(r + 1) + ": combined pruning scored more than value-only");
    }
  }

  const double wall_basic = basic.prune_ms + basic.select_ms;
  const double wall_sv = sv.prune_ms + sv.select_ms;
  o.expect(wall_sv < wall_basic, "combined pruning (" + fmt_double(wall_sv) +
                                     "ms) was not faster than the full scan (" +
                                     fmt_double(wall_basic) + "ms)");

  std::ostringstream d;
  d << ds.total_claims << " claims over 1000000 sources; full scan "
    << fmt_secs(wall_basic / 1000.0) << ", combined pruning " << fmt_secs(wall_sv / 1000.0);
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- criterion 7

Outcome quality_trends() {
  Outcome o;

  // Shape matters here: items outnumber per-source claims by a wide margin, so
  // full coverage needs a broad selection whose size barely moves as the
  // retention target tightens the value set. That keeps the precision
  // denominator (the distinct asserted pairs) comparable across the sweep;
  // datasets whose selection collapses from dozens of sources to a handful
  // swing precision mechanically, which is selection-size drift, not a
  // pruning-quality effect.
  SyntheticConfig sc;
  sc.sources = 4000;
  sc.items = 400;
  sc.mu = 10;
  sc.error_mean_fraction = 0.05;
  sc.seed = 7;

  {
    const Dataset ds = generate_dataset(sc);
    CoverageIndex ix = build_index(ds.catalog, full_query(ds.catalog));
    std::vector<double> precisions, recalls;
    for (const double rho : {0.9, 0.8, 0.7, 0.6, 0.5}) {
      SelectionConfig cfg;
      cfg.rho = rho;
      const SelectionReport rep = run_selection(ix, ds.catalog, cfg);
      const MetricResult m = evaluate(ix, ds.catalog, ds.golden, rep.selected);
      o.expect(m.precision.has_value() && m.recall.has_value(), "metrics went missing");
      if (!o.pass) return o;
      precisions.push_back(*m.precision);
      recalls.push_back(*m.recall);
    }
    const auto [lo, hi] = std::minmax_element(precisions.begin(), precisions.end());
    o.expect(*hi - *lo <= 0.02 + 1e-12,
             "precision moved by " + fmt_double(*hi - *lo) + " across the retention sweep");
    for (std::size_t i = 1; i < recalls.size(); ++i) {
      o.expect(recalls[i] <= recalls[i - 1] + 1e-12,
               "recall rose from " + fmt_double(recalls[i - 1]) + " to " +
                   fmt_double(recalls[i]) + " as the retention target fell");
    }
    o.detail = "retention sweep precision spread " + fmt_double(*hi - *lo) + ", recall " +
               fmt_double(recalls.front()) + " down to " + fmt_double(recalls.back());
  }

  std::vector<double> precisions;
  for (const double err : {0.05, 0.1, 0.2, 0.3, 0.4}) {
    sc.error_mean_fraction = err;
    const Dataset ds = generate_dataset(sc);
    CoverageIndex ix = build_index(ds.catalog, full_query(ds.catalog));
    const SelectionReport rep = run_min_cost(ix, ds.catalog);
    const MetricResult m = evaluate(ix, ds.catalog, ds.golden, rep.selected);
    o.expect(m.precision.has_value(), "metrics went missing");
    if (!o.pass) return o;
    precisions.push_back(*m.precision);
  }
  for (std::size_t i = 1; i < precisions.size(); ++i) {
    o.expect(precisions[i] <= precisions[i - 1] + 1e-12,
             "precision rose from " + fmt_double(precisions[i - 1]) + " to " +
                 fmt_double(precisions[i]) + " as the error rate grew");
  }
  o.detail += "; error sweep precision " + fmt_double(precisions.front()) + " down to " +
              fmt_double(precisions.back());
  return o;
}

// ---------------------------------------------------------------- criterion 8

Outcome deterministic_reports() {
  Outcome o;

  SyntheticConfig sc;
  sc.sources = 300;
  sc.items = 60;
  sc.mu = 12;
  sc.seed = 13;
  const Dataset ds = generate_dataset(sc);

  const auto render_once = [&] {
    CoverageIndex ix = build_index(ds.catalog, full_query(ds.catalog));
    SelectionConfig cfg;
    cfg.objective = Objective::max_contribution;
    cfg.budget = 25.0;
    cfg.rho = 0.8;
    cfg.source_prune = true;
    const SelectionReport rep = run_selection(ix, ds.catalog, cfg);
    const MetricResult m = evaluate(ix, ds.catalog, ds.golden, rep.selected);
    const ReportInputs in{rep, ds.catalog, &m, {}, {}};
    return render_kv(in);
  };
  const std::string first = strip_timing_lines(render_once());
  o.expect(first == strip_timing_lines(render_once()),
           "two in-process runs rendered different reports");
  o.expect(!first.empty() && first.find("_ms=") == std::string::npos,
           "timing lines survived the strip");

  const char* bin = std::getenv("SRCSEL_BIN");
  o.expect(bin != nullptr, "SRCSEL_BIN is not set, cannot replay through the binary");
  if (bin) {
    const fixtures::TempDir dir;
    write_dataset(ds, dir.path("d"));
    const std::string base = std::string(bin) + " select --claims " + dir.path("d.claims.csv") +
                             " --golden " + dir.path("d.golden.csv") +
                             " --objective maxcontrib --budget 25 --prune both --rho 0.8 --out ";
    for (const char* name : {"a.kv", "b.kv"}) {
      const std::string cmd = base + dir.path(name) + " >" + dir.path("log.txt") + " 2>&1";
      const int status = std::system(cmd.c_str());
      o.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "the binary run failed");
    }
    const std::string a = strip_timing_lines(slurp(dir.path("a.kv")));
    const std::string b = strip_timing_lines(slurp(dir.path("b.kv")));
    o.expect(!a.empty() && a == b, "two binary runs rendered different reports");
  }

  o.detail = "library and binary replays byte-identical once timing lines are dropped";
  return o;
}

struct Criterion {
  const char* name;
  Outcome (*run)();
  double limit_secs;  // 0 means unlimited
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"worked-example replay", worked_example_replay, 1.0},
      {"contribution vs inclusion-exclusion referee", contribution_referee, 60.0},
      {"greedy approximation bounds", approximation_bounds, 300.0},
      {"value-pruning retention guarantee", retention_guarantee, 0.0},
      {"lazy source pruning equivalence", lazy_matches_eager, 0.0},
      {"million-source strategy run", scale_run, 600.0},
      {"quality trends under pruning and noise", quality_trends, 0.0},
      {"deterministic reports", deterministic_reports, 0.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    const Criterion& c = criteria[i];
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failure = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (o.pass && c.limit_secs > 0 && secs >= c.limit_secs) {
      o.pass = false;
      o.failure = "took " + fmt_secs(secs) + ", limit " + fmt_secs(c.limit_secs);
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << c.name << " ("
              << (o.pass ? o.detail : o.failure) << "; " << fmt_secs(secs) << ")" << std::endl;
    failures += o.pass ? 0 : 1;
  }

  if (failures == 0) {
    std::cout << "acceptance: all " << std::size(criteria) << " criteria hold" << std::endl;
  } else {
    std::cout << "acceptance: " << failures << " of " << std::size(criteria)
              << " criteria failed" << std::endl;
  }
  return failures;
}
