#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srcsel/catalog.hpp"
#include "srcsel/index.hpp"
#include "srcsel/pruning.hpp"

namespace srcsel {

enum class Objective {
  min_cost,          // cover everything representable, minimize total cost
  max_contribution,  // maximize coverage under a cost budget
};

const char* objective_name(Objective o);

struct SelectionConfig {
  Objective objective = Objective::min_cost;
  std::optional<double> budget;  // required for max_contribution, forbidden otherwise
  std::optional<double> rho;     // value-prune retention target; absent or 1 keeps all
  bool source_prune = false;     // lazy rounds with cached bounds after round 1
  bool use_reference_kernel = false;  // serial entry-scan scorer instead of the pull kernel
};

struct RoundRecord {
  std::uint32_t round = 0;
  SourceIdx source = 0;
  double marginal = 0;   // irreplaceable contribution of the pick this round
  double ratio = 0;      // marginal / cost
  double cum_cov = 0;    // covered mass after the pick
  double cum_cost = 0;   // total cost after the pick
  std::uint64_t scored = 0;   // candidates whose exact marginal was computed
  std::uint64_t skipped = 0;  // pool members passed over via cached bounds
};

struct SelectionReport {
  Objective objective = Objective::min_cost;
  std::optional<double> budget;
  std::optional<double> rho;
  bool source_prune = false;

  std::vector<SourceIdx> selected;  // in pick order
  std::vector<RoundRecord> rounds;

  double cov_omega = 0;   // total unpruned mass the run could cover
  double final_cov = 0;
  double final_cost = 0;
  std::uint64_t entries = 0;
  std::uint64_t entries_pruned = 0;
  std::uint64_t candidates = 0;  // pool size at round 1

  PruneReport prune;
  std::vector<std::string> warnings;

  double prune_ms = 0;
  double select_ms = 0;
};

/// Scratch shared by the round functions. gain/uncovered are indexed by
/// SourceIdx and only the slots of current pool members are meaningful.
struct RoundState {
  std::vector<SourceIdx> pool;  // unselected candidates, ascending
  std::vector<SourceIdx> selected;
  std::vector<std::uint8_t> selected_flag;  // by SourceIdx
  std::vector<double> gain;
  std::vector<std::uint32_t> uncovered;
  double cum_cost = 0;
  std::uint32_t round = 0;
};

struct RoundOutcome {
  std::optional<SourceIdx> winner;
  double marginal = 0;
  double ratio = 0;
  std::uint64_t scored = 0;
  std::uint64_t skipped = 0;
};

// One eager round: scores every pool member with the configured kernel, then
// takes the best eligible candidate. Eligible means the candidate still covers
// at least one uncovered unpruned entry, and under max_contribution also fits
// the remaining budget. Ties break toward smaller cost, then smaller source
// index (lexicographically smaller id, since interning is sorted).
RoundOutcome select_max_round(CoverageIndex& ix, const SourceCatalog& catalog, RoundState& rs,
                              const SelectionConfig& cfg);

// One lazy round over the seeded heap. Pops in descending cached-bound order;
// stops outright once the top key falls below the incumbent ratio (the rest of
// the heap is skipped wholesale), re-scores a candidate exactly only when its
// upper bound could still win. Picks the same winner as the eager round.
RoundOutcome select_max_round_lazy(CoverageIndex& ix, const SourceCatalog& catalog,
                                   RoundState& rs, LazyState& lazy, const SelectionConfig& cfg);

// Full greedy driver: validates the config, resets run state on the index,
// applies value pruning when rho < 1, then loops rounds until no eligible
// candidate remains. Under min_cost that happens exactly when every unpruned
// entry reachable by some source is covered.
SelectionReport run_selection(CoverageIndex& ix, const SourceCatalog& catalog,
                              const SelectionConfig& cfg);

SelectionReport run_min_cost(CoverageIndex& ix, const SourceCatalog& catalog,
                             SelectionConfig cfg = {});
SelectionReport run_max_contribution(CoverageIndex& ix, const SourceCatalog& catalog,
                                     double budget, SelectionConfig cfg = {});

struct OptimalResult {
  double value = 0;  // min_cost: cheapest full-coverage cost; max_contribution: best coverage
  std::vector<SourceIdx> witness;
};

// Exhaustive referee over all candidate subsets, guarded to at most 20
// candidates. Respects pruned entries and the current covered flags being
// clear; intended for freshly built or reset indexes.
OptimalResult brute_force_optimal(const CoverageIndex& ix, const SourceCatalog& catalog,
                                  Objective objective, std::optional<double> budget = {});

}  // namespace srcsel
