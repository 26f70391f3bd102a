#include "srcsel/selection.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "srcsel/coverage.hpp"
#include "srcsel/fmt.hpp"
#include "srcsel/scoring.hpp"

namespace srcsel {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void validate_config(const SelectionConfig& cfg) {
  if (cfg.objective == Objective::max_contribution) {
    if (!cfg.budget) throw std::invalid_argument("max_contribution requires a budget");
    if (!(*cfg.budget >= 0.0)) {
      throw std::invalid_argument("budget must be nonnegative, got " + fmt_double(*cfg.budget));
    }
  } else if (cfg.budget) {
    throw std::invalid_argument("min_cost does not take a budget");
  }
  if (cfg.rho) derive_value_threshold(*cfg.rho);  // throws outside (0, 1]
}

void apply_winner(CoverageIndex& ix, RoundState& rs, const SourceCatalog& catalog, SourceIdx w) {
  for (std::uint32_t e : ix.entries_of(w)) {
    if (!ix.pruned(e)) ix.set_covered(e);
  }
  std::erase(rs.pool, w);
  rs.selected.push_back(w);
  rs.selected_flag[w] = 1;
  rs.cum_cost += catalog.cost(w);
}

}  // namespace

const char* objective_name(Objective o) {
  return o == Objective::min_cost ? "mincost" : "maxcontrib";
}

RoundOutcome select_max_round(CoverageIndex& ix, const SourceCatalog& catalog, RoundState& rs,
                              const SelectionConfig& cfg) {
  RoundOutcome out;
  const double remaining =
      cfg.budget ? *cfg.budget - rs.cum_cost : std::numeric_limits<double>::infinity();

  if (cfg.use_reference_kernel) {
    score_gains_reference(ix, rs.pool, rs.gain, rs.uncovered);
  } else {
    score_gains(ix, rs.pool, rs.gain, rs.uncovered);
  }
  out.scored = rs.pool.size();

  bool have_best = false;
  double best_ratio = 0, best_cost = 0;
  SourceIdx best_src = 0;
  for (SourceIdx s : rs.pool) {
    if (rs.uncovered[s] == 0) continue;  // nothing new to add
    const double cost = catalog.cost(s);
    if (cost > remaining) continue;
    const double ratio = rs.gain[s] / cost;
    if (!have_best || ratio > best_ratio ||
        (ratio == best_ratio && (cost < best_cost || (cost == best_cost && s < best_src)))) {
      have_best = true;
      best_ratio = ratio;
      best_cost = cost;
      best_src = s;
    }
  }
  if (have_best) {
    out.winner = best_src;
    out.marginal = rs.gain[best_src];
    out.ratio = best_ratio;
  }
  return out;
}

SelectionReport run_selection(CoverageIndex& ix, const SourceCatalog& catalog,
                              const SelectionConfig& cfg) {
  validate_config(cfg);

  SelectionReport rep;
  rep.objective = cfg.objective;
  rep.budget = cfg.budget;
  rep.rho = cfg.rho;
  rep.source_prune = cfg.source_prune;
  rep.entries = ix.entry_count();

  ix.reset_covered();
  ix.reset_pruned();

  const auto t_prune = std::chrono::steady_clock::now();
  if (cfg.rho && *cfg.rho < 1.0) {
    rep.prune = prune_values(ix, *cfg.rho);
    rep.entries_pruned = rep.prune.entries_pruned;
  }
  rep.prune_ms = ms_since(t_prune);
  rep.cov_omega = total_mass(ix);

  const auto t_select = std::chrono::steady_clock::now();
  RoundState rs;
  rs.selected_flag.assign(catalog.source_count(), 0);
  rs.gain.assign(catalog.source_count(), 0.0);
  rs.uncovered.assign(catalog.source_count(), 0);
  for (SourceIdx s : ix.candidates()) {
    for (std::uint32_t e : ix.entries_of(s)) {
      if (!ix.pruned(e)) {
        rs.pool.push_back(s);
        break;
      }
    }
  }
  rep.candidates = rs.pool.size();

  std::optional<LazyState> lazy;
  while (!rs.pool.empty()) {
    ++rs.round;
    RoundOutcome out;
    if (!cfg.source_prune) {
      out = select_max_round(ix, catalog, rs, cfg);
    } else if (rs.round == 1) {
      out = select_max_round(ix, catalog, rs, cfg);
      // The full pass just priced every pool member at Cov(s); seed the cache
      // so later rounds only re-score what the bounds cannot dismiss.
      lazy = make_lazy_state(ix, catalog, rs.pool, rs.gain, out.winner);
    } else {
      out = select_max_round_lazy(ix, catalog, rs, *lazy, cfg);
    }
    if (!out.winner) break;

    apply_winner(ix, rs, catalog, *out.winner);
    if (lazy) {
      lazy->cov_selected = covered_mass(ix);
      lazy->cov_remaining = uncovered_mass(ix);
    }

    RoundRecord rec;
    rec.round = rs.round;
    rec.source = *out.winner;
    rec.marginal = out.marginal;
    rec.ratio = out.ratio;
    rec.cum_cov = covered_mass(ix);
    rec.cum_cost = rs.cum_cost;
    rec.scored = out.scored;
    rec.skipped = out.skipped;
    rep.rounds.push_back(rec);
    rep.selected.push_back(*out.winner);
  }
  rep.select_ms = ms_since(t_select);

  rep.final_cov = covered_mass(ix);
  rep.final_cost = rs.cum_cost;
  if (cfg.objective == Objective::max_contribution && rep.selected.empty() && !rs.pool.empty()) {
    double cheapest = std::numeric_limits<double>::infinity();
    for (SourceIdx s : rs.pool) cheapest = std::min(cheapest, catalog.cost(s));
    rep.warnings.push_back("budget " + fmt_double(*cfg.budget) +
                           " excludes every candidate (cheapest costs " + fmt_double(cheapest) +
                           ")");
  }
  return rep;
}

SelectionReport run_min_cost(CoverageIndex& ix, const SourceCatalog& catalog, SelectionConfig cfg) {
  cfg.objective = Objective::min_cost;
  cfg.budget.reset();
  return run_selection(ix, catalog, cfg);
}

SelectionReport run_max_contribution(CoverageIndex& ix, const SourceCatalog& catalog,
                                     double budget, SelectionConfig cfg) {
  cfg.objective = Objective::max_contribution;
  cfg.budget = budget;
  return run_selection(ix, catalog, cfg);
}

OptimalResult brute_force_optimal(const CoverageIndex& ix, const SourceCatalog& catalog,
                                  Objective objective, std::optional<double> budget) {
  if (objective == Objective::max_contribution && !budget) {
    throw std::invalid_argument("max_contribution requires a budget");
  }

  std::vector<SourceIdx> cands;
  for (SourceIdx s : ix.candidates()) {
    for (std::uint32_t e : ix.entries_of(s)) {
      if (!ix.pruned(e)) {
        cands.push_back(s);
        break;
      }
    }
  }
  if (cands.size() > 20) {
    throw std::invalid_argument("brute force is limited to 20 candidates, got " +
                                std::to_string(cands.size()));
  }

  // Each unpruned entry becomes (probability, bitmask of candidate positions
  // asserting it); a subset's coverage is then one pass over the entries.
  std::vector<double> probs;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t e = 0; e < ix.entry_count(); ++e) {
    if (ix.pruned(e)) continue;
    std::uint32_t mask = 0;
    const auto posting = ix.posting(e);
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (std::binary_search(posting.begin(), posting.end(), cands[k])) mask |= 1u << k;
    }
    probs.push_back(ix.entry_prob(e));
    masks.push_back(mask);
  }

  const std::uint32_t subsets = cands.empty() ? 1u : (1u << cands.size());
  const double full_target = total_mass(ix) - 1e-9;

  bool have_best = false;
  double best_value = 0, best_cost = 0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    double cost = 0;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (mask & (1u << k)) cost += catalog.cost(cands[k]);
    }
    double cov = 0;
    for (std::size_t e = 0; e < probs.size(); ++e) {
      if (masks[e] & mask) cov += probs[e];
    }
    if (objective == Objective::min_cost) {
      if (cov < full_target) continue;
      if (!have_best || cost < best_cost) {
        have_best = true;
        best_cost = cost;
        best_value = cost;
        best_mask = mask;
      }
    } else {
      if (cost > *budget) continue;
      if (!have_best || cov > best_value || (cov == best_value && cost < best_cost)) {
        have_best = true;
        best_value = cov;
        best_cost = cost;
        best_mask = mask;
      }
    }
  }

  OptimalResult res;
  if (!have_best) return res;  // min_cost with unreachable full coverage
  res.value = best_value;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (best_mask & (1u << k)) res.witness.push_back(cands[k]);
  }
  return res;
}

}  // namespace srcsel
