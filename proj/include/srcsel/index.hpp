#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "srcsel/catalog.hpp"

namespace srcsel {

// A query resolved against a catalog: the dense item ids that exist, plus the
// requested ids that do not (reported, never silently dropped).
struct QueryInfo {
  std::vector<ItemIdx> items;         // ascending, duplicate-free
  std::vector<std::string> missing;   // ids absent from the catalog, input order
};

QueryInfo resolve_query(const SourceCatalog& catalog, std::span<const std::string> ids);
QueryInfo full_query(const SourceCatalog& catalog);

/// Inverted coverage index over the queried items: one entry per distinct
/// (item, value) pair carrying its truth probability, a posting list of the
/// asserting sources in ascending id order, and two flag bits. `covered` is
/// flipped as greedy selection proceeds; `pruned` is set by value-level
/// pruning before any round runs. Entries are ordered by (item, value), so
/// the same catalog and query always rebuild the identical index.
///
/// Two adjacency views exist: entry -> posting list of sources, and
/// source -> ascending list of its entry ids. The second is what lets a
/// scoring kernel fold one source's probabilities in a fixed order no matter
/// how work is partitioned across threads.
class CoverageIndex {
 public:
  std::size_t entry_count() const { return probs_.size(); }
  std::size_t posting_count() const { return postings_.size(); }
  std::size_t source_count() const { return source_count_; }

  ItemIdx entry_item(std::size_t e) const { return entry_item_[e]; }
  ValueIdx entry_value(std::size_t e) const { return entry_value_[e]; }
  double entry_prob(std::size_t e) const { return probs_[e]; }

  std::span<const SourceIdx> posting(std::size_t e) const {
    return {postings_.data() + post_off_[e], post_off_[e + 1] - post_off_[e]};
  }

  bool covered(std::size_t e) const { return covered_[e] != 0; }
  void set_covered(std::size_t e) { covered_[e] = 1; }
  void reset_covered() { std::fill(covered_.begin(), covered_.end(), 0); }

  bool pruned(std::size_t e) const { return pruned_[e] != 0; }
  void set_pruned(std::size_t e) { pruned_[e] = 1; }
  void reset_pruned() { std::fill(pruned_.begin(), pruned_.end(), 0); }

  // Ascending entry ids asserted by source s; empty when s asserts nothing queried.
  std::span<const std::uint32_t> entries_of(SourceIdx s) const {
    return {src_entries_.data() + src_off_[s], src_off_[s + 1] - src_off_[s]};
  }

  // Sources asserting at least one queried value, ascending.
  const std::vector<SourceIdx>& candidates() const { return candidates_; }

  // Resolved query items (including ones that ended up with zero entries).
  const std::vector<ItemIdx>& query_items() const { return query_items_; }

  // Half-open entry range [first, second) for one item; (0, 0) when absent.
  std::pair<std::size_t, std::size_t> item_range(ItemIdx item) const;

  std::optional<std::size_t> find_entry(ItemIdx item, ValueIdx value) const;

  // FNV-1a over the structural content (not the flags); determinism checks.
  std::uint64_t content_digest() const;

  friend CoverageIndex build_index(const SourceCatalog& catalog, const QueryInfo& query);

 private:
  std::vector<ItemIdx> entry_item_;
  std::vector<ValueIdx> entry_value_;
  std::vector<double> probs_;
  std::vector<std::uint8_t> covered_;
  std::vector<std::uint8_t> pruned_;
  std::vector<std::uint32_t> post_off_;   // entry_count + 1
  std::vector<SourceIdx> postings_;
  std::vector<std::uint32_t> src_off_;    // source_count + 1
  std::vector<std::uint32_t> src_entries_;
  std::vector<SourceIdx> candidates_;
  std::vector<ItemIdx> query_items_;
  std::vector<std::pair<ItemIdx, std::uint32_t>> item_begin_;  // ascending by item
  std::size_t source_count_ = 0;
};

CoverageIndex build_index(const SourceCatalog& catalog, const QueryInfo& query);

}  // namespace srcsel
