#include "srcsel/pruning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "srcsel/coverage.hpp"
#include "srcsel/selection.hpp"

namespace srcsel {

double derive_value_threshold(double rho) {
  if (!(rho > 0.0) || rho > 1.0) {
    throw std::invalid_argument("retention target must be in (0, 1], got " + std::to_string(rho));
  }
  return std::log(1.0 / rho);
}

PruneConfig make_prune_config(std::optional<double> rho, bool source_prune) {
  PruneConfig pc;
  pc.source_prune = source_prune;
  if (rho) {
    pc.rho = *rho;
    pc.p = derive_value_threshold(*rho);
  }
  return pc;
}

PruneReport prune_values(CoverageIndex& ix, double rho) {
  const double p = derive_value_threshold(rho);
  PruneReport rep;
  if (p <= 0.0) return rep;

  std::vector<std::uint32_t> order;
  for (ItemIdx item : ix.query_items()) {
    auto [begin, end] = ix.item_range(item);
    const std::uint32_t n = end - begin;
    if (n <= 1) continue;  // the single value is always retained

    order.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) order[k] = begin + k;
    // Ascending probability; ties by value index, which is ascending value
    // string because interning is sorted.
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (ix.entry_prob(a) != ix.entry_prob(b)) return ix.entry_prob(a) < ix.entry_prob(b);
      return ix.entry_value(a) < ix.entry_value(b);
    });

    PrunedItem pi;
    pi.item = item;
    double spent = 0.0;
    for (std::uint32_t k = 0; k + 1 < n; ++k) {  // keep at least one value
      const std::uint32_t e = order[k];
      const double prob = ix.entry_prob(e);
      const double charge = -std::log1p(-prob);  // +inf at prob == 1, never fits
      if (spent + charge > p) break;
      spent += charge;
      ix.set_pruned(e);
      pi.values.push_back(ix.entry_value(e));
      pi.mass += prob;
      pi.retention *= 1.0 - prob;
    }
    if (!pi.values.empty()) {
      rep.entries_pruned += pi.values.size();
      rep.items.push_back(std::move(pi));
    }
  }
  return rep;
}

LazyState make_lazy_state(const CoverageIndex& ix, const SourceCatalog& catalog,
                          std::span<const SourceIdx> pool, std::span<const double> seed_gains,
                          std::optional<SourceIdx> round1_winner) {
  LazyState lazy;
  lazy.con.assign(catalog.source_count(), 0.0);
  lazy.cov_omega = total_mass(ix);
  lazy.cov_selected = covered_mass(ix);
  lazy.cov_remaining = uncovered_mass(ix);
  for (SourceIdx s : pool) {
    lazy.con[s] = seed_gains[s];
    if (round1_winner && *round1_winner == s) continue;
    lazy.heap.push({seed_gains[s] / catalog.cost(s), s});
  }
  return lazy;
}

double upper_bound(const LazyState& lazy, SourceIdx s, double cost) {
  return std::min(lazy.cov_remaining, lazy.con[s]) / cost;
}

RoundOutcome select_max_round_lazy(CoverageIndex& ix, const SourceCatalog& catalog,
                                   RoundState& rs, LazyState& lazy, const SelectionConfig& cfg) {
  RoundOutcome out;
  const double remaining =
      cfg.budget ? *cfg.budget - rs.cum_cost : std::numeric_limits<double>::infinity();

  struct Best {
    double ratio;
    double cost;
    SourceIdx src;
    double marginal;
  };
  std::optional<Best> best;
  std::vector<LazyState::HeapItem> put_back;

  while (!lazy.heap.empty()) {
    const LazyState::HeapItem top = lazy.heap.top();
    if (rs.selected_flag[top.src]) {  // defensive; winners are not reinserted
      lazy.heap.pop();
      continue;
    }
    // Every remaining key is at most top.key; once that cannot beat the
    // incumbent, the whole rest of the heap is skipped in one step.
    if (best && top.key < best->ratio) break;
    lazy.heap.pop();

    const double cost = catalog.cost(top.src);
    if (cost > remaining) {
      put_back.push_back(top);
      continue;
    }
    if (best && upper_bound(lazy, top.src, cost) < best->ratio) {
      put_back.push_back(top);
      continue;
    }

    const auto [gain, unc] = marginal_index_counted(ix, top.src);
    lazy.con[top.src] = gain;
    ++out.scored;
    const double ratio = gain / cost;
    if (unc > 0) {
      if (!best || ratio > best->ratio ||
          (ratio == best->ratio &&
           (cost < best->cost || (cost == best->cost && top.src < best->src)))) {
        best = Best{ratio, cost, top.src, gain};
      }
    }
    put_back.push_back({ratio, top.src});
  }

  for (const LazyState::HeapItem& item : put_back) {
    if (best && item.src == best->src) continue;
    lazy.heap.push(item);
  }
  if (best) {
    out.winner = best->src;
    out.marginal = best->marginal;
    out.ratio = best->ratio;
  }
  out.skipped = rs.pool.size() - out.scored;
  return out;
}

}  // namespace srcsel
