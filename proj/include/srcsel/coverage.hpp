#pragma once

#include <span>
#include <string>

#include "srcsel/index.hpp"

namespace srcsel {

// All folds below run in ascending entry order, so repeated evaluation over
// the same index is bit-identical. Pruned entries never contribute.

// Coverage of one source: probability mass of the entries asserting it.
double cov_source(const CoverageIndex& ix, SourceIdx s);
double cov_source(const CoverageIndex& ix, const SourceCatalog& catalog,
                  std::string_view source_id);

// Coverage of a source set: mass of entries asserted by at least one member.
double cov_set(const CoverageIndex& ix, std::span<const SourceIdx> set);
double cov_set(const CoverageIndex& ix, const SourceCatalog& catalog,
               std::span<const std::string> ids);

// Mass aggregates over unpruned entries.
double total_mass(const CoverageIndex& ix);      // all
double covered_mass(const CoverageIndex& ix);    // covered flag set
double uncovered_mass(const CoverageIndex& ix);  // covered flag clear

// Irreplaceable contribution of s against an explicit selected set: the mass
// of s's entries that no selected source asserts.
double marginal_of(const CoverageIndex& ix, std::span<const SourceIdx> selected, SourceIdx s);

// The same quantity read from the covered flags a selection run maintains.
double marginal_index(const CoverageIndex& ix, SourceIdx s);

// marginal_index plus the count of uncovered unpruned entries asserting s.
// The count is what decides round eligibility: a source whose every entry is
// covered or pruned can never advance a run, whatever its mass says.
std::pair<double, std::uint32_t> marginal_index_counted(const CoverageIndex& ix, SourceIdx s);

// Exponential-time referee for the contribution: expands the intersection
// terms over every nonempty subset of the selected set with alternating signs,
// touching no covered flags. Throws std::invalid_argument when selected
// contains s or has more than 20 members (2^20 subsets is the guard).
double marginal_inclusion_exclusion(const CoverageIndex& ix,
                                    std::span<const SourceIdx> selected, SourceIdx s);

}  // namespace srcsel
