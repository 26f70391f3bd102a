#include "srcsel/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "srcsel/csv.hpp"
#include "srcsel/fmt.hpp"

namespace srcsel {

namespace {

std::optional<std::uint32_t> find_sorted(const std::vector<std::string>& names,
                                         std::string_view id) {
  auto it = std::lower_bound(names.begin(), names.end(), id);
  if (it == names.end() || *it != id) return std::nullopt;
  return static_cast<std::uint32_t>(it - names.begin());
}

}  // namespace

SourceCatalog::SourceCatalog(std::vector<std::string> sources, std::vector<double> costs,
                             std::vector<std::string> items, std::vector<std::string> values,
                             std::vector<Claim> claims,
                             std::unordered_map<std::uint64_t, double> probs,
                             std::vector<std::string> warnings)
    : sources_(std::move(sources)),
      costs_(std::move(costs)),
      items_(std::move(items)),
      values_(std::move(values)),
      claims_(std::move(claims)),
      probs_(std::move(probs)),
      warnings_(std::move(warnings)) {}

std::optional<SourceIdx> SourceCatalog::find_source(std::string_view id) const {
  return find_sorted(sources_, id);
}

std::optional<ItemIdx> SourceCatalog::find_item(std::string_view id) const {
  return find_sorted(items_, id);
}

std::optional<ValueIdx> SourceCatalog::find_value(std::string_view id) const {
  return find_sorted(values_, id);
}

double SourceCatalog::prob(ItemIdx item, ValueIdx value) const {
  auto it = probs_.find(pair_key(item, value));
  if (it == probs_.end()) {
    throw std::invalid_argument("no probability recorded for (" + items_.at(item) + ", " +
                                values_.at(value) + ")");
  }
  return it->second;
}

std::uint32_t CatalogBuilder::Intern::id(std::string&& s) {
  auto [it, inserted] = map.try_emplace(std::move(s), static_cast<std::uint32_t>(names.size()));
  if (inserted) names.push_back(it->first);
  return it->second;
}

void CatalogBuilder::add_claim(std::string source, std::string item, std::string value,
                               std::optional<double> prob, std::uint32_t line) {
  if (prob && (*prob < 0.0 || *prob > 1.0)) {
    throw ParseError(line, "probability " + fmt_double(*prob) + " outside [0, 1] for (" + item +
                               ", " + value + ")");
  }
  RawRow row;
  row.source = sources_.id(std::move(source));
  row.item = items_.id(std::move(item));
  row.value = values_.id(std::move(value));
  row.has_prob = prob.has_value();
  row.prob = prob.value_or(0.0);
  row.line = line;
  rows_.push_back(row);
}

void CatalogBuilder::set_cost(std::string source, double cost, std::uint32_t line) {
  costs_.emplace_back(std::move(source), std::make_pair(cost, line));
}

SourceCatalog CatalogBuilder::build() {
  // Re-map arrival-order intern ids to lexicographic dense ids.
  auto sorted_remap = [](Intern& in, std::vector<std::string>& out_names) {
    out_names = in.names;
    std::sort(out_names.begin(), out_names.end());
    std::vector<std::uint32_t> remap(in.names.size());
    for (std::size_t old = 0; old < in.names.size(); ++old) {
      remap[old] = static_cast<std::uint32_t>(
          std::lower_bound(out_names.begin(), out_names.end(), in.names[old]) -
          out_names.begin());
    }
    return remap;
  };

  std::vector<std::string> source_names, item_names, value_names;
  const auto smap = sorted_remap(sources_, source_names);
  const auto imap = sorted_remap(items_, item_names);
  const auto vmap = sorted_remap(values_, value_names);
  for (RawRow& r : rows_) {
    r.source = smap[r.source];
    r.item = imap[r.item];
    r.value = vmap[r.value];
  }

  // A source asserts at most one value per item; a second row for the same
  // (source, item) is rejected whether it agrees or not.
  std::vector<std::uint32_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const RawRow &ra = rows_[a], &rb = rows_[b];
    if (ra.source != rb.source) return ra.source < rb.source;
    if (ra.item != rb.item) return ra.item < rb.item;
    return a < b;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    const RawRow &prev = rows_[order[k - 1]], &cur = rows_[order[k]];
    if (prev.source == cur.source && prev.item == cur.item) {
      const std::string where =
          "(" + source_names[cur.source] + ", " + item_names[cur.item] + ")";
      if (prev.value != cur.value) {
        throw ParseError(cur.line, "conflicting value for " + where);
      }
      throw ParseError(cur.line, "duplicate claim for " + where);
    }
  }

  // Probabilities per (item, value). Rows sharing a pair must state identical
  // probabilities; a pair may also be stated by some rows and omitted by
  // others, in which case the stated value carries.
  struct PairProb {
    double prob = 0;
    bool stated = false;
  };
  std::unordered_map<std::uint64_t, PairProb> pair_probs;
  pair_probs.reserve(rows_.size());
  for (const RawRow& r : rows_) {
    auto& pp = pair_probs[SourceCatalog::pair_key(r.item, r.value)];
    if (!r.has_prob) continue;
    if (pp.stated && pp.prob != r.prob) {
      throw ParseError(r.line, "conflicting probability " + fmt_double(r.prob) + " vs " +
                                   fmt_double(pp.prob) + " for (" + item_names[r.item] + ", " +
                                   value_names[r.value] + ")");
    }
    pp.prob = r.prob;
    pp.stated = true;
  }

  // Group pairs by item to complete missing probabilities and check sums.
  struct ItemValue {
    ValueIdx value;
    std::uint64_t votes = 0;
    std::uint32_t any_line = 0;
  };
  std::vector<std::vector<ItemValue>> by_item(item_names.size());
  for (const RawRow& r : rows_) {
    auto& vals = by_item[r.item];
    auto it = std::find_if(vals.begin(), vals.end(),
                           [&](const ItemValue& iv) { return iv.value == r.value; });
    if (it == vals.end()) {
      vals.push_back({r.value, 1, r.line});
    } else {
      ++it->votes;
    }
  }

  std::vector<std::string> warnings;
  std::unordered_map<std::uint64_t, double> probs;
  probs.reserve(pair_probs.size());
  for (ItemIdx i = 0; i < by_item.size(); ++i) {
    auto& vals = by_item[i];
    if (vals.empty()) continue;
    std::sort(vals.begin(), vals.end(),
              [](const ItemValue& a, const ItemValue& b) { return a.value < b.value; });
    std::size_t stated = 0;
    for (const ItemValue& iv : vals) {
      if (pair_probs[SourceCatalog::pair_key(i, iv.value)].stated) ++stated;
    }
    if (stated == vals.size()) {
      double sum = 0;
      for (const ItemValue& iv : vals) {
        const double p = pair_probs[SourceCatalog::pair_key(i, iv.value)].prob;
        probs[SourceCatalog::pair_key(i, iv.value)] = p;
        sum += p;
      }
      if (sum > 1.0 + 1e-9) {
        warnings.push_back("probabilities for item " + item_names[i] + " sum to " +
                           fmt_double(sum));
      }
    } else if (stated == 0) {
      // No probability stated anywhere for this item: vote-share estimate.
      std::vector<std::uint64_t> votes(vals.size());
      for (std::size_t k = 0; k < vals.size(); ++k) votes[k] = vals[k].votes;
      const auto shares = vote_share_probs(votes);
      for (std::size_t k = 0; k < vals.size(); ++k) {
        probs[SourceCatalog::pair_key(i, vals[k].value)] = shares[k];
      }
    } else {
      for (const ItemValue& iv : vals) {
        if (!pair_probs[SourceCatalog::pair_key(i, iv.value)].stated) {
          throw ParseError(iv.any_line,
                           "item " + item_names[i] + " states probabilities for " +
                               std::to_string(stated) + " of " + std::to_string(vals.size()) +
                               " values but none for (" + item_names[i] + ", " +
                               value_names[iv.value] + ")");
        }
      }
    }
  }

  // Costs: default 1, overridden by the cost table where present.
  std::vector<double> costs(source_names.size(), 1.0);
  for (const auto& [name, cost_line] : costs_) {
    const auto [cost, line] = cost_line;
    if (cost <= 0.0) {
      throw ParseError(line, "nonpositive cost " + fmt_double(cost) + " for source " + name);
    }
    const auto idx = find_sorted(source_names, name);
    if (!idx) {
      warnings.push_back("cost for unknown source " + name + " ignored");
      continue;
    }
    costs[*idx] = cost;
  }

  std::vector<Claim> claims;
  claims.reserve(rows_.size());
  for (std::uint32_t k : order) {
    const RawRow& r = rows_[k];
    claims.push_back({r.source, r.item, r.value});
  }

  return SourceCatalog(std::move(source_names), std::move(costs), std::move(item_names),
                       std::move(value_names), std::move(claims), std::move(probs),
                       std::move(warnings));
}

std::vector<double> vote_share_probs(std::span<const std::uint64_t> votes) {
  if (votes.empty()) throw std::invalid_argument("vote-share estimate over no values");
  std::uint64_t total = 0;
  for (std::uint64_t v : votes) total += v;
  if (total == 0) throw std::invalid_argument("vote-share estimate with zero total votes");
  std::vector<double> probs(votes.size());
  double head = 0;
  for (std::size_t k = 0; k + 1 < votes.size(); ++k) {
    probs[k] = static_cast<double>(votes[k]) / static_cast<double>(total);
    head += probs[k];
  }
  probs.back() = 1.0 - head;
  return probs;
}

std::vector<std::pair<std::string, double>> estimate_truth_probabilities(
    std::vector<std::pair<std::string, std::uint64_t>> votes) {
  std::sort(votes.begin(), votes.end());
  std::vector<std::uint64_t> counts(votes.size());
  for (std::size_t k = 0; k < votes.size(); ++k) counts[k] = votes[k].second;
  const auto shares = vote_share_probs(counts);
  std::vector<std::pair<std::string, double>> out(votes.size());
  for (std::size_t k = 0; k < votes.size(); ++k) out[k] = {std::move(votes[k].first), shares[k]};
  return out;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  return in;
}

[[noreturn]] void rethrow_with_path(const std::string& path, const ParseError& e) {
  throw std::runtime_error(path + ":" + std::to_string(e.line) + ": " + e.what());
}

double parse_double(const std::string& text, const std::string& path, std::uint32_t line) {
  double out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc() || res.ptr != last) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": malformed number '" + text +
                             "'");
  }
  return out;
}

void expect_header(std::ifstream& in, const std::string& path, const std::string& expected) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ":1: empty file");
  chomp_cr(line);
  if (line != expected) {
    throw std::runtime_error(path + ":1: expected header '" + expected + "', got '" + line + "'");
  }
}

}  // namespace

SourceCatalog ingest_claims(const std::string& claims_path, const std::string& costs_path) {
  CatalogBuilder builder;
  {
    auto in = open_or_throw(claims_path);
    expect_header(in, claims_path, "source,item,value,prob");
    std::string line;
    std::vector<std::string> fields;
    std::uint32_t line_no = 1;
    while (std::getline(in, line)) {
      ++line_no;
      chomp_cr(line);
      if (line.empty()) continue;
      if (!split_csv_record(line, fields)) {
        throw std::runtime_error(claims_path + ":" + std::to_string(line_no) +
                                 ": malformed CSV record");
      }
      if (fields.size() != 4) {
        throw std::runtime_error(claims_path + ":" + std::to_string(line_no) +
                                 ": expected 4 fields, got " + std::to_string(fields.size()));
      }
      std::optional<double> prob;
      if (!fields[3].empty()) prob = parse_double(fields[3], claims_path, line_no);
      try {
        builder.add_claim(std::move(fields[0]), std::move(fields[1]), std::move(fields[2]), prob,
                          line_no);
      } catch (const ParseError& e) {
        rethrow_with_path(claims_path, e);
      }
    }
  }
  if (!costs_path.empty()) {
    auto in = open_or_throw(costs_path);
    expect_header(in, costs_path, "source,cost");
    std::string line;
    std::vector<std::string> fields;
    std::uint32_t line_no = 1;
    while (std::getline(in, line)) {
      ++line_no;
      chomp_cr(line);
      if (line.empty()) continue;
      if (!split_csv_record(line, fields) || fields.size() != 2) {
        throw std::runtime_error(costs_path + ":" + std::to_string(line_no) +
                                 ": expected 2 fields");
      }
      builder.set_cost(std::move(fields[0]), parse_double(fields[1], costs_path, line_no),
                       line_no);
    }
  }
  try {
    return builder.build();
  } catch (const ParseError& e) {
    rethrow_with_path(claims_path, e);
  }
}

std::vector<std::string> load_query(const std::string& path) {
  auto in = open_or_throw(path);
  std::vector<std::string> items;
  std::string line;
  while (std::getline(in, line)) {
    chomp_cr(line);
    if (!line.empty()) items.push_back(line);
  }
  return items;
}

std::vector<std::pair<std::string, std::string>> load_golden(const std::string& path) {
  auto in = open_or_throw(path);
  expect_header(in, path, "item,value");
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  std::vector<std::string> fields;
  std::uint32_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    chomp_cr(line);
    if (line.empty()) continue;
    if (!split_csv_record(line, fields) || fields.size() != 2) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected 2 fields");
    }
    rows.emplace_back(std::move(fields[0]), std::move(fields[1]));
  }
  return rows;
}

}  // namespace srcsel
