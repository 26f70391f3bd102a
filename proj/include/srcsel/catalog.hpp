#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace srcsel {

using SourceIdx = std::uint32_t;
using ItemIdx = std::uint32_t;
using ValueIdx = std::uint32_t;

// One row of the flat claim relation: source s asserts that item i has value v.
// All three ids are dense indices into the catalog's interned string tables.
struct Claim {
  SourceIdx source;
  ItemIdx item;
  ValueIdx value;
};

/// Immutable claim store. Ids are interned so that the dense index order equals
/// lexicographic id order; everything downstream (posting lists, tie-breaks)
/// can therefore compare indices instead of strings. Truth probabilities are
/// kept per (item, value) pair, never per claim, because claims sharing a pair
/// must agree on the probability.
class SourceCatalog {
 public:
  SourceCatalog() = default;

  // Direct constructor for callers that already hold sorted, validated data
  // (the synthetic generator). `claims` must be sorted by (source, item) and
  // `probs` must cover every (item, value) pair appearing in `claims`.
  SourceCatalog(std::vector<std::string> sources, std::vector<double> costs,
                std::vector<std::string> items, std::vector<std::string> values,
                std::vector<Claim> claims, std::unordered_map<std::uint64_t, double> probs,
                std::vector<std::string> warnings = {});

  std::size_t source_count() const { return sources_.size(); }
  std::size_t item_count() const { return items_.size(); }
  std::size_t value_count() const { return values_.size(); }
  std::size_t claim_count() const { return claims_.size(); }

  const std::vector<std::string>& sources() const { return sources_; }
  const std::vector<std::string>& items() const { return items_; }
  const std::vector<std::string>& values() const { return values_; }
  const std::vector<double>& costs() const { return costs_; }
  const std::vector<Claim>& claims() const { return claims_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  const std::string& source_id(SourceIdx s) const { return sources_[s]; }
  const std::string& item_id(ItemIdx i) const { return items_[i]; }
  const std::string& value_id(ValueIdx v) const { return values_[v]; }
  double cost(SourceIdx s) const { return costs_[s]; }

  std::optional<SourceIdx> find_source(std::string_view id) const;
  std::optional<ItemIdx> find_item(std::string_view id) const;
  std::optional<ValueIdx> find_value(std::string_view id) const;

  // Truth probability of (item, value); throws std::invalid_argument if the
  // pair never appears in the claims.
  double prob(ItemIdx item, ValueIdx value) const;

  static std::uint64_t pair_key(ItemIdx item, ValueIdx value) {
    return (static_cast<std::uint64_t>(item) << 32) | value;
  }

 private:
  std::vector<std::string> sources_;
  std::vector<double> costs_;
  std::vector<std::string> items_;
  std::vector<std::string> values_;
  std::vector<Claim> claims_;
  std::unordered_map<std::uint64_t, double> probs_;
  std::vector<std::string> warnings_;
};

/// Accumulates raw string rows and performs all ingest validation in build():
/// id interning, duplicate and conflict detection, probability completion via
/// the vote-share estimator, cost defaults. Throws ParseError carrying the
/// offending input line.
class CatalogBuilder {
 public:
  // `line` is the 1-based input line for error reporting; 0 for programmatic rows.
  void add_claim(std::string source, std::string item, std::string value,
                 std::optional<double> prob, std::uint32_t line = 0);
  void set_cost(std::string source, double cost, std::uint32_t line = 0);

  SourceCatalog build();

 private:
  struct RawRow {
    std::uint32_t source, item, value;  // arrival-order intern ids
    double prob;
    bool has_prob;
    std::uint32_t line;
  };
  struct Intern {
    std::unordered_map<std::string, std::uint32_t> map;
    std::vector<std::string> names;
    std::uint32_t id(std::string&& s);
  };
  Intern sources_, items_, values_;
  std::vector<RawRow> rows_;
  std::vector<std::pair<std::string, std::pair<double, std::uint32_t>>> costs_;
};

// Vote-share truth probabilities for one item's values. Input pairs are
// (value, vote count); the result is sorted by value and sums to exactly 1.0,
// the lexicographically last value absorbing the floating-point residue.
// Throws std::invalid_argument on an empty input or a zero vote total.
std::vector<std::pair<std::string, double>> estimate_truth_probabilities(
    std::vector<std::pair<std::string, std::uint64_t>> votes);

// Positional core of the estimator: shares votes[i]/total with the last
// position absorbing the residue so a left-to-right fold gives exactly 1.0.
std::vector<double> vote_share_probs(std::span<const std::uint64_t> votes);

// File loaders. Claims CSV header is "source,item,value,prob" (prob may be
// empty); costs CSV header is "source,cost" and the file is optional, missing
// sources default to cost 1. Errors are std::runtime_error with "path:line:".
SourceCatalog ingest_claims(const std::string& claims_path,
                            const std::string& costs_path = {});

// One item id per line, blank lines ignored.
std::vector<std::string> load_query(const std::string& path);

// CSV with header "item,value".
std::vector<std::pair<std::string, std::string>> load_golden(const std::string& path);

}  // namespace srcsel
