#pragma once

#include <cstdint>
#include <span>

#include "srcsel/index.hpp"

namespace srcsel {

// Batch scoring for one greedy round: for every candidate source, the mass of
// its uncovered unpruned entries (its current marginal) and the count of those
// entries. `gain` and `uncovered` are indexed by SourceIdx and must be at
// least ix.source_count() long; only the candidates' slots are written.
//
// Both kernels accumulate each source's mass in ascending entry order starting
// from +0.0, so their outputs are bit-identical to each other and invariant
// under the OpenMP thread count.

// Parallel kernel: one task per candidate, folding over the source-major
// adjacency. This is the partition-independent realization of in-round
// parallel scanning; per-source sums never cross a thread boundary.
void score_gains(const CoverageIndex& ix, std::span<const SourceIdx> candidates,
                 std::span<double> gain, std::span<std::uint32_t> uncovered);

// Serial reference: a single pass over the index entries pushing each entry's
// probability into the accumulators of the sources on its posting list. Kept
// as the oracle the parallel kernel is tested against, and as the comparison
// row in the kernel benchmark.
void score_gains_reference(const CoverageIndex& ix, std::span<const SourceIdx> candidates,
                           std::span<double> gain, std::span<std::uint32_t> uncovered);

}  // namespace srcsel
