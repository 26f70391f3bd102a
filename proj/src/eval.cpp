#include "srcsel/eval.hpp"

#include <limits>
#include <unordered_set>

namespace srcsel {

MetricResult evaluate(const CoverageIndex& ix, const SourceCatalog& catalog,
                      std::span<const std::pair<std::string, std::string>> golden,
                      std::span<const SourceIdx> selected) {
  MetricResult res;

  std::vector<std::uint8_t> is_selected(catalog.source_count(), 0);
  for (SourceIdx s : selected) is_selected[s] = 1;

  constexpr ValueIdx kNoValue = std::numeric_limits<ValueIdx>::max();
  std::unordered_set<ItemIdx> seen;
  for (const auto& [item_id, value_id] : golden) {
    const std::optional<ItemIdx> item = catalog.find_item(item_id);
    if (!item) {
      res.warnings.push_back("golden item " + item_id + " is not in the catalog");
      continue;
    }
    const auto [begin, end] = ix.item_range(*item);
    if (begin == end) {
      res.warnings.push_back("golden item " + item_id + " is outside the query scope");
      continue;
    }
    if (!seen.insert(*item).second) {
      res.warnings.push_back("duplicate golden row for item " + item_id + " ignored");
      continue;
    }
    const std::optional<ValueIdx> gv = catalog.find_value(value_id);
    const ValueIdx golden_value = gv ? *gv : kNoValue;

    ++res.golden_total;
    bool hit = false;
    for (std::size_t e = begin; e < end; ++e) {
      bool asserted = false;
      for (SourceIdx s : ix.posting(e)) {
        if (is_selected[s]) {
          asserted = true;
          break;
        }
      }
      if (!asserted) continue;
      ++res.pairs_total;
      if (ix.entry_value(e) == golden_value) {
        ++res.pairs_true;
        hit = true;
      }
    }
    if (hit) ++res.golden_hit;
  }

  if (res.pairs_total > 0) {
    res.precision = static_cast<double>(res.pairs_true) / static_cast<double>(res.pairs_total);
  }
  if (res.golden_total > 0) {
    res.recall = static_cast<double>(res.golden_hit) / static_cast<double>(res.golden_total);
  }
  return res;
}

}  // namespace srcsel
