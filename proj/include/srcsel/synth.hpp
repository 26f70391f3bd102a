#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "srcsel/catalog.hpp"

namespace srcsel {

// Knobs for the synthetic claim corpus. Each source claims a value for k
// distinct items, k ~ round(Normal(mu, sigma)) clamped to [1, items]; of those
// claims, e ~ round(Normal(error_mean_fraction * mu, that mean / 3)) clamped
// to [0, k] assert a wrong value instead of the item's golden one. Every item
// carries one golden value and wrong_values decoys, all named v0..vK with the
// golden slot drawn per item. Truth probabilities come from vote shares over
// the generated claims, costs are all 1.
struct SyntheticConfig {
  std::uint32_t sources = 1000;
  std::uint32_t items = 0;         // 0 derives 2 * mu
  std::uint32_t wrong_values = 4;  // decoy values per item, beside the golden one
  double mu = 100.0;               // mean claims per source
  double sigma = 0.0;              // 0 derives mu / 3
  double error_mean_fraction = 0.2;
  std::uint64_t seed = 1;
  std::uint64_t claim_cap = 200'000'000;  // guard on sources * mu
};

struct Dataset {
  SourceCatalog catalog;
  std::vector<std::pair<std::string, std::string>> golden;  // (item, value) rows
  std::uint64_t total_claims = 0;
  std::uint64_t wrong_claims = 0;
};

// Deterministic for a given config: every source draws from its own stream
// derived from (seed, source), so the output does not depend on thread count
// or generation order. Throws std::invalid_argument on out-of-domain knobs or
// when sources * mu exceeds claim_cap; the message names SRCSEL_CLAIM_CAP as
// the override.
Dataset generate_dataset(const SyntheticConfig& cfg);

// Writes <prefix>.claims.csv (source,item,value,prob with explicit
// probabilities), <prefix>.costs.csv, and <prefix>.golden.csv.
void write_dataset(const Dataset& ds, const std::string& prefix);

// SRCSEL_CLAIM_CAP from the environment, or the built-in default when unset.
// Throws std::invalid_argument if set to something that is not a positive
// integer.
std::uint64_t claim_cap_from_env();

// splitmix64 step; used to spread one user seed into per-source sub-seeds.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace srcsel
