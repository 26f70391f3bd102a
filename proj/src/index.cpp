#include "srcsel/index.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>

namespace srcsel {

QueryInfo resolve_query(const SourceCatalog& catalog, std::span<const std::string> ids) {
  QueryInfo q;
  q.items.reserve(ids.size());
  for (const std::string& id : ids) {
    if (auto idx = catalog.find_item(id)) {
      q.items.push_back(*idx);
    } else {
      q.missing.push_back(id);
    }
  }
  std::sort(q.items.begin(), q.items.end());
  q.items.erase(std::unique(q.items.begin(), q.items.end()), q.items.end());
  return q;
}

QueryInfo full_query(const SourceCatalog& catalog) {
  QueryInfo q;
  q.items.resize(catalog.item_count());
  for (ItemIdx i = 0; i < q.items.size(); ++i) q.items[i] = i;
  return q;
}

CoverageIndex build_index(const SourceCatalog& catalog, const QueryInfo& query) {
  CoverageIndex ix;
  ix.source_count_ = catalog.source_count();
  ix.query_items_ = query.items;

  std::vector<std::uint8_t> queried(catalog.item_count(), 0);
  for (ItemIdx i : query.items) queried[i] = 1;

  // Distinct (item, value) pairs among queried claims become the entries;
  // sorting the packed keys yields the (item, value) order directly.
  const auto& claims = catalog.claims();
  std::vector<std::uint64_t> keys;
  keys.reserve(claims.size());
  for (const Claim& c : claims) {
    if (queried[c.item]) keys.push_back(SourceCatalog::pair_key(c.item, c.value));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  const std::size_t n_entries = keys.size();
  ix.entry_item_.resize(n_entries);
  ix.entry_value_.resize(n_entries);
  ix.probs_.resize(n_entries);
  ix.covered_.assign(n_entries, 0);
  ix.pruned_.assign(n_entries, 0);
  for (std::size_t e = 0; e < n_entries; ++e) {
    ix.entry_item_[e] = static_cast<ItemIdx>(keys[e] >> 32);
    ix.entry_value_[e] = static_cast<ValueIdx>(keys[e] & 0xffffffffu);
    ix.probs_[e] = catalog.prob(ix.entry_item_[e], ix.entry_value_[e]);
  }

  // Posting lists, filled in claim order. Claims are sorted by source, so each
  // entry's posting list comes out ascending without further sorting.
  std::vector<std::uint32_t> counts(n_entries, 0);
  std::vector<std::uint32_t> entry_of_claim;
  entry_of_claim.reserve(claims.size());
  for (const Claim& c : claims) {
    if (!queried[c.item]) continue;
    const std::uint64_t key = SourceCatalog::pair_key(c.item, c.value);
    const std::size_t e =
        std::lower_bound(keys.begin(), keys.end(), key) - keys.begin();
    entry_of_claim.push_back(static_cast<std::uint32_t>(e));
    ++counts[e];
  }
  ix.post_off_.assign(n_entries + 1, 0);
  for (std::size_t e = 0; e < n_entries; ++e) ix.post_off_[e + 1] = ix.post_off_[e] + counts[e];
  ix.postings_.resize(ix.post_off_.back());
  {
    std::vector<std::uint32_t> cursor(ix.post_off_.begin(), ix.post_off_.end() - 1);
    std::size_t k = 0;
    for (const Claim& c : claims) {
      if (!queried[c.item]) continue;
      ix.postings_[cursor[entry_of_claim[k]]++] = c.source;
      ++k;
    }
  }
#ifndef NDEBUG
  for (std::size_t e = 0; e < n_entries; ++e) {
    const auto post = ix.posting(e);
    for (std::size_t k = 1; k < post.size(); ++k) assert(post[k - 1] < post[k]);
  }
#endif

  // Source-major adjacency: ascending entry ids per source.
  std::vector<std::uint32_t> deg(ix.source_count_, 0);
  for (std::size_t e = 0; e < n_entries; ++e) {
    for (SourceIdx s : ix.posting(e)) ++deg[s];
  }
  ix.src_off_.assign(ix.source_count_ + 1, 0);
  for (std::size_t s = 0; s < ix.source_count_; ++s) ix.src_off_[s + 1] = ix.src_off_[s] + deg[s];
  ix.src_entries_.resize(ix.src_off_.back());
  {
    std::vector<std::uint32_t> cursor(ix.src_off_.begin(), ix.src_off_.end() - 1);
    for (std::size_t e = 0; e < n_entries; ++e) {
      for (SourceIdx s : ix.posting(e)) ix.src_entries_[cursor[s]++] = static_cast<std::uint32_t>(e);
    }
  }
  for (SourceIdx s = 0; s < ix.source_count_; ++s) {
    if (deg[s] > 0) ix.candidates_.push_back(s);
  }

  // Entries are item-contiguous; remember where each item starts.
  for (std::size_t e = 0; e < n_entries; ++e) {
    if (e == 0 || ix.entry_item_[e] != ix.entry_item_[e - 1]) {
      ix.item_begin_.emplace_back(ix.entry_item_[e], static_cast<std::uint32_t>(e));
    }
  }
  return ix;
}

std::pair<std::size_t, std::size_t> CoverageIndex::item_range(ItemIdx item) const {
  auto it = std::lower_bound(item_begin_.begin(), item_begin_.end(), item,
                             [](const auto& a, ItemIdx b) { return a.first < b; });
  if (it == item_begin_.end() || it->first != item) return {0, 0};
  const std::size_t begin = it->second;
  const std::size_t end =
      (it + 1 == item_begin_.end()) ? entry_count() : static_cast<std::size_t>((it + 1)->second);
  return {begin, end};
}

std::optional<std::size_t> CoverageIndex::find_entry(ItemIdx item, ValueIdx value) const {
  auto [begin, end] = item_range(item);
  for (std::size_t e = begin; e < end; ++e) {
    if (entry_value_[e] == value) return e;
  }
  return std::nullopt;
}

std::uint64_t CoverageIndex::content_digest() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < bytes; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  };
  auto mix_vec = [&mix](const auto& v) {
    if (!v.empty()) mix(v.data(), v.size() * sizeof(v[0]));
  };
  mix_vec(entry_item_);
  mix_vec(entry_value_);
  mix_vec(probs_);
  mix_vec(post_off_);
  mix_vec(postings_);
  mix_vec(src_off_);
  mix_vec(src_entries_);
  return h;
}

}  // namespace srcsel
