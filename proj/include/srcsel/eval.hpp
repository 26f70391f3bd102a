#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srcsel/catalog.hpp"
#include "srcsel/index.hpp"

namespace srcsel {

struct MetricResult {
  std::optional<double> precision;  // null when the selection asserts no scored pairs
  std::optional<double> recall;     // null when no golden row is in scope
  std::uint64_t pairs_true = 0;     // asserted distinct pairs matching the golden value
  std::uint64_t pairs_total = 0;    // asserted distinct pairs on golden items
  std::uint64_t golden_hit = 0;     // golden items whose golden value someone selected asserts
  std::uint64_t golden_total = 0;   // golden rows resolvable to the index scope
  std::vector<std::string> warnings;
};

// Scores a selection against a golden standard of (item, value) rows.
//
// Precision looks at the distinct (item, value) pairs that at least one
// selected source asserts, restricted to items with a golden row, and asks
// which fraction carries the golden value. Recall asks for which fraction of
// in-scope golden items some selected source asserts the golden value; an
// empty selection scores recall 0, not null.
//
// Pruned entries still count as assertions here: pruning trims what selection
// pays for, not what the chosen sources say. Golden rows whose item is unknown
// or outside the index scope are skipped with a warning; duplicate rows for an
// item keep the first and warn. A golden value no source ever claimed simply
// cannot be hit, which is a miss, not a warning.
MetricResult evaluate(const CoverageIndex& ix, const SourceCatalog& catalog,
                      std::span<const std::pair<std::string, std::string>> golden,
                      std::span<const SourceIdx> selected);

}  // namespace srcsel
