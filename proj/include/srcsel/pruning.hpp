#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "srcsel/index.hpp"

namespace srcsel {

// Per-item pruned-mass budget p = ln(1/rho). Domain is rho in (0, 1];
// rho = 1 gives p = 0, which prunes nothing. Throws std::invalid_argument
// outside the domain.
double derive_value_threshold(double rho);

struct PruneConfig {
  double rho = 1.0;
  double p = 0.0;  // derived, ln(1/rho)
  bool source_prune = false;
};

PruneConfig make_prune_config(std::optional<double> rho, bool source_prune);

struct PrunedItem {
  ItemIdx item = 0;
  std::vector<ValueIdx> values;  // pruned values in the ascending-prob walk order
  double mass = 0;               // sum of pruned probs
  double retention = 1;          // prod(1 - prob) over pruned values
};

struct PruneReport {
  std::vector<PrunedItem> items;  // items that lost at least one value
  std::uint64_t entries_pruned = 0;
};

// Value-level pruning: walks each item's entries in ascending (prob, value)
// order and prunes the longest prefix whose retention product prod(1 - P(v))
// stays at or above rho, tracked as the cumulative -ln(1 - P(v)) against the
// budget p. Because -ln(1-x) >= x, the pruned prefix mass also satisfies
// sum P(v) <= p. At least one value per item always survives. Pruned sets are
// nested as rho falls.
PruneReport prune_values(CoverageIndex& ix, double rho);

/// State carried across lazy greedy rounds: the cached contribution bound per
/// source (Con against the selection the source was last scored at, which only
/// shrinks by submodularity) and the coverage aggregates that feed the upper
/// bound. Candidates live in a max-heap keyed by cached-Con/cost so each round
/// visits them in descending bound order and can stop at the first key below
/// the incumbent ratio, skipping the whole remainder at once.
struct LazyState {
  std::vector<double> con;    // by SourceIdx; seeded with Cov(s) before round 1
  double cov_omega = 0;       // total unpruned mass
  double cov_selected = 0;    // covered unpruned mass
  double cov_remaining = 0;   // uncovered unpruned mass, folded in index order

  struct HeapItem {
    double key;  // con/cost at push time; stale keys stay valid upper bounds
    SourceIdx src;
  };
  struct KeyOrder {
    bool operator()(const HeapItem& a, const HeapItem& b) const {
      if (a.key != b.key) return a.key < b.key;
      return a.src > b.src;  // equal keys pop in ascending source order
    }
  };
  std::priority_queue<HeapItem, std::vector<HeapItem>, KeyOrder> heap;
};

// Builds the seeded state from the round-1 scoring pass: con[s] = Cov(s) for
// every pool member, everyone except the round-1 winner goes on the heap.
LazyState make_lazy_state(const CoverageIndex& ix, const SourceCatalog& catalog,
                          std::span<const SourceIdx> pool, std::span<const double> seed_gains,
                          std::optional<SourceIdx> round1_winner);

// Up(s) = min(remaining uncovered mass, cached Con) / cost. The remaining mass
// is kept as a fold over the uncovered entries rather than a subtraction, so a
// candidate whose entries are exactly the remaining set produces the identical
// double and an exact tie can never be skipped past.
double upper_bound(const LazyState& lazy, SourceIdx s, double cost);

}  // namespace srcsel
