#include "srcsel/scoring.hpp"

#include <cassert>
#include <vector>

namespace srcsel {

void score_gains(const CoverageIndex& ix, std::span<const SourceIdx> candidates,
                 std::span<double> gain, std::span<std::uint32_t> uncovered) {
  assert(gain.size() >= ix.source_count() && uncovered.size() >= ix.source_count());
  const std::int64_t n = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < n; ++k) {
    const SourceIdx s = candidates[k];
    double sum = 0;
    std::uint32_t cnt = 0;
    for (std::uint32_t e : ix.entries_of(s)) {
      if (!ix.pruned(e) && !ix.covered(e)) {
        sum += ix.entry_prob(e);
        ++cnt;
      }
    }
    gain[s] = sum;
    uncovered[s] = cnt;
  }
}

void score_gains_reference(const CoverageIndex& ix, std::span<const SourceIdx> candidates,
                           std::span<double> gain, std::span<std::uint32_t> uncovered) {
  assert(gain.size() >= ix.source_count() && uncovered.size() >= ix.source_count());
  std::vector<std::uint8_t> is_candidate(ix.source_count(), 0);
  for (SourceIdx s : candidates) {
    is_candidate[s] = 1;
    gain[s] = 0;
    uncovered[s] = 0;
  }
  for (std::size_t e = 0; e < ix.entry_count(); ++e) {
    if (ix.pruned(e) || ix.covered(e)) continue;
    const double p = ix.entry_prob(e);
    for (SourceIdx s : ix.posting(e)) {
      if (is_candidate[s]) {
        gain[s] += p;
        ++uncovered[s];
      }
    }
  }
}

}  // namespace srcsel
