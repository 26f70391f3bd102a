#include "srcsel/coverage.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace srcsel {

namespace {

SourceIdx resolve_source(const SourceCatalog& catalog, std::string_view id) {
  if (auto s = catalog.find_source(id)) return *s;
  throw std::invalid_argument("unknown source " + std::string(id));
}

}  // namespace

double cov_source(const CoverageIndex& ix, SourceIdx s) {
  if (s >= ix.source_count()) throw std::invalid_argument("source index out of range");
  double sum = 0;
  for (std::uint32_t e : ix.entries_of(s)) {
    if (!ix.pruned(e)) sum += ix.entry_prob(e);
  }
  return sum;
}

double cov_source(const CoverageIndex& ix, const SourceCatalog& catalog,
                  std::string_view source_id) {
  return cov_source(ix, resolve_source(catalog, source_id));
}

double cov_set(const CoverageIndex& ix, std::span<const SourceIdx> set) {
  std::vector<std::uint8_t> member(ix.source_count(), 0);
  for (SourceIdx s : set) {
    if (s >= ix.source_count()) throw std::invalid_argument("source index out of range");
    member[s] = 1;
  }
  double sum = 0;
  for (std::size_t e = 0; e < ix.entry_count(); ++e) {
    if (ix.pruned(e)) continue;
    for (SourceIdx s : ix.posting(e)) {
      if (member[s]) {
        sum += ix.entry_prob(e);
        break;
      }
    }
  }
  return sum;
}

double cov_set(const CoverageIndex& ix, const SourceCatalog& catalog,
               std::span<const std::string> ids) {
  std::vector<SourceIdx> set;
  set.reserve(ids.size());
  for (const std::string& id : ids) set.push_back(resolve_source(catalog, id));
  return cov_set(ix, set);
}

double total_mass(const CoverageIndex& ix) {
  double sum = 0;
  for (std::size_t e = 0; e < ix.entry_count(); ++e) {
    if (!ix.pruned(e)) sum += ix.entry_prob(e);
  }
  return sum;
}

double covered_mass(const CoverageIndex& ix) {
  double sum = 0;
  for (std::size_t e = 0; e < ix.entry_count(); ++e) {
    if (!ix.pruned(e) && ix.covered(e)) sum += ix.entry_prob(e);
  }
  return sum;
}

double uncovered_mass(const CoverageIndex& ix) {
  double sum = 0;
  for (std::size_t e = 0; e < ix.entry_count(); ++e) {
    if (!ix.pruned(e) && !ix.covered(e)) sum += ix.entry_prob(e);
  }
  return sum;
}

double marginal_of(const CoverageIndex& ix, std::span<const SourceIdx> selected, SourceIdx s) {
  if (s >= ix.source_count()) throw std::invalid_argument("source index out of range");
  std::vector<std::uint8_t> member(ix.source_count(), 0);
  for (SourceIdx t : selected) {
    if (t >= ix.source_count()) throw std::invalid_argument("source index out of range");
    member[t] = 1;
  }
  double sum = 0;
  for (std::uint32_t e : ix.entries_of(s)) {
    if (ix.pruned(e)) continue;
    bool taken = false;
    for (SourceIdx t : ix.posting(e)) {
      if (member[t]) {
        taken = true;
        break;
      }
    }
    if (!taken) sum += ix.entry_prob(e);
  }
  return sum;
}

double marginal_index(const CoverageIndex& ix, SourceIdx s) {
  return marginal_index_counted(ix, s).first;
}

std::pair<double, std::uint32_t> marginal_index_counted(const CoverageIndex& ix, SourceIdx s) {
  if (s >= ix.source_count()) throw std::invalid_argument("source index out of range");
  double sum = 0;
  std::uint32_t uncovered = 0;
  for (std::uint32_t e : ix.entries_of(s)) {
    if (!ix.pruned(e) && !ix.covered(e)) {
      sum += ix.entry_prob(e);
      ++uncovered;
    }
  }
  return {sum, uncovered};
}

double marginal_inclusion_exclusion(const CoverageIndex& ix,
                                    std::span<const SourceIdx> selected, SourceIdx s) {
  if (selected.size() > 20) {
    throw std::invalid_argument("inclusion-exclusion guard: selected set larger than 20");
  }
  if (s >= ix.source_count()) throw std::invalid_argument("source index out of range");
  for (SourceIdx t : selected) {
    if (t == s) throw std::invalid_argument("selected set contains the scored source");
    if (t >= ix.source_count()) throw std::invalid_argument("source index out of range");
  }

  // For each of s's entries, which selected members also assert it.
  const auto entries = ix.entries_of(s);
  std::vector<std::uint32_t> masks;
  std::vector<double> probs;
  masks.reserve(entries.size());
  probs.reserve(entries.size());
  double cov_s = 0;
  for (std::uint32_t e : entries) {
    if (ix.pruned(e)) continue;
    std::uint32_t mask = 0;
    const auto post = ix.posting(e);
    for (std::size_t k = 0; k < selected.size(); ++k) {
      if (std::binary_search(post.begin(), post.end(), selected[k])) {
        mask |= (1u << k);
      }
    }
    masks.push_back(mask);
    probs.push_back(ix.entry_prob(e));
    cov_s += ix.entry_prob(e);
  }

  double correction = 0;
  const std::uint32_t subsets = selected.empty() ? 0 : (1u << selected.size());
  for (std::uint32_t t = 1; t < subsets; ++t) {
    double inter = 0;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      if ((masks[k] & t) == t) inter += probs[k];
    }
    const bool odd = (std::popcount(t) & 1) != 0;
    correction += odd ? inter : -inter;
  }
  return cov_s - correction;
}

}  // namespace srcsel
