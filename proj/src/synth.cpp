#include "srcsel/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <charconv>
#include <fstream>
#include <random>
#include <stdexcept>

#include "srcsel/fmt.hpp"

namespace srcsel {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::uint32_t decimal_width(std::uint64_t n) {
  std::uint32_t w = 1;
  while (n >= 10) {
    n /= 10;
    ++w;
  }
  return w;
}

std::string padded_id(char tag, std::uint64_t n, std::uint32_t width) {
  std::string digits = std::to_string(n);
  std::string out(1, tag);
  out.append(width > digits.size() ? width - digits.size() : 0, '0');
  out += digits;
  return out;
}

std::uint64_t source_stream_seed(std::uint64_t seed, std::uint32_t source) {
  std::uint64_t state = seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(source) + 1));
  return splitmix64(state);
}

void check_cap(std::uint64_t claims, std::uint64_t cap) {
  if (claims > cap) {
    throw std::invalid_argument("claim volume " + std::to_string(claims) + " exceeds the cap " +
                                std::to_string(cap) + "; set SRCSEL_CLAIM_CAP to raise it");
  }
}

}  // namespace

std::uint64_t claim_cap_from_env() {
  const char* raw = std::getenv("SRCSEL_CLAIM_CAP");
  if (!raw || !*raw) return SyntheticConfig{}.claim_cap;
  std::uint64_t cap = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, cap);
  if (ec != std::errc{} || ptr != end || cap == 0) {
    throw std::invalid_argument(std::string("SRCSEL_CLAIM_CAP must be a positive integer, got '") +
                                raw + "'");
  }
  return cap;
}

Dataset generate_dataset(const SyntheticConfig& cfg) {
  if (cfg.sources == 0) throw std::invalid_argument("sources must be at least 1");
  if (!(cfg.mu > 0)) throw std::invalid_argument("mu must be positive");
  if (cfg.wrong_values == 0) throw std::invalid_argument("wrong_values must be at least 1");
  if (!(cfg.error_mean_fraction >= 0) || cfg.error_mean_fraction > 1) {
    throw std::invalid_argument("error_mean_fraction must be in [0, 1]");
  }
  if (cfg.sigma < 0) throw std::invalid_argument("sigma must be nonnegative");

  const double expected = static_cast<double>(cfg.sources) * cfg.mu;
  check_cap(static_cast<std::uint64_t>(expected), cfg.claim_cap);

  const std::uint32_t n_items =
      cfg.items ? cfg.items : static_cast<std::uint32_t>(std::max<long long>(1, 2 * std::llround(cfg.mu)));
  const std::uint32_t slots = cfg.wrong_values + 1;
  const double sigma = cfg.sigma > 0 ? cfg.sigma : cfg.mu / 3.0;
  const double err_mean = cfg.error_mean_fraction * cfg.mu;

  // Golden slot per item, from a stream independent of the per-source ones.
  std::vector<std::uint8_t> golden_slot(n_items);
  for (std::uint32_t item = 0; item < n_items; ++item) {
    std::uint64_t state = cfg.seed ^ 0xD1B54A32D192ED03ULL ^ (static_cast<std::uint64_t>(item) << 1);
    golden_slot[item] = static_cast<std::uint8_t>(splitmix64(state) % slots);
  }

  // Value table: v0..vK interned in lexicographic order.
  std::vector<std::string> values(slots);
  for (std::uint32_t v = 0; v < slots; ++v) values[v] = "v" + std::to_string(v);
  std::vector<std::string> sorted_values = values;
  std::sort(sorted_values.begin(), sorted_values.end());
  std::vector<ValueIdx> slot_to_value(slots);
  for (std::uint32_t v = 0; v < slots; ++v) {
    slot_to_value[v] = static_cast<ValueIdx>(
        std::lower_bound(sorted_values.begin(), sorted_values.end(), values[v]) -
        sorted_values.begin());
  }

  // Pass 1: per-source claim counts, to lay the claims out contiguously.
  std::vector<std::uint32_t> k_of(cfg.sources);
#pragma omp parallel for schedule(static)
  for (std::uint32_t i = 0; i < cfg.sources; ++i) {
    std::mt19937_64 eng(source_stream_seed(cfg.seed, i));
    std::normal_distribution<double> dk(cfg.mu, sigma);
    const long long k = std::llround(dk(eng));
    k_of[i] = static_cast<std::uint32_t>(std::clamp<long long>(k, 1, n_items));
  }

  std::vector<std::uint64_t> offset(cfg.sources + 1, 0);
  for (std::uint32_t i = 0; i < cfg.sources; ++i) offset[i + 1] = offset[i] + k_of[i];
  const std::uint64_t total = offset[cfg.sources];
  check_cap(total, cfg.claim_cap);

  // Pass 2: replay each source's stream (the k draw repeats identically) and
  // fill its slice. Item ids ascend within a slice, so the claim array comes
  // out sorted by (source, item) with no global sort.
  std::vector<Claim> claims(total);
  std::vector<std::uint32_t> errs_of(cfg.sources, 0);
#pragma omp parallel
  {
    std::vector<std::uint8_t> taken(n_items, 0);
    std::vector<std::uint32_t> picked;
    std::vector<std::uint32_t> positions;
#pragma omp for schedule(static)
    for (std::uint32_t i = 0; i < cfg.sources; ++i) {
      std::mt19937_64 eng(source_stream_seed(cfg.seed, i));
      std::normal_distribution<double> dk(cfg.mu, sigma);
      (void)dk(eng);  // k, already recorded
      const std::uint32_t k = k_of[i];

      std::uint32_t e = 0;
      if (err_mean > 0) {
        std::normal_distribution<double> de(err_mean, err_mean / 3.0);
        e = static_cast<std::uint32_t>(std::clamp<long long>(std::llround(de(eng)), 0, k));
      }
      errs_of[i] = e;

      // Floyd's sampling: k distinct items, O(k) with the taken[] scratch.
      picked.clear();
      for (std::uint32_t j = n_items - k; j < n_items; ++j) {
        const std::uint32_t t =
            std::uniform_int_distribution<std::uint32_t>(0, j)(eng);
        const std::uint32_t pick = taken[t] ? j : t;
        taken[pick] = 1;
        picked.push_back(pick);
      }
      for (std::uint32_t v : picked) taken[v] = 0;
      std::sort(picked.begin(), picked.end());

      // Which of the k positions claim a wrong value: partial Fisher-Yates.
      positions.resize(k);
      for (std::uint32_t j = 0; j < k; ++j) positions[j] = j;
      for (std::uint32_t j = 0; j < e; ++j) {
        const std::uint32_t swap_with =
            j + std::uniform_int_distribution<std::uint32_t>(0, k - 1 - j)(eng);
        std::swap(positions[j], positions[swap_with]);
      }
      std::vector<std::uint8_t> wrong(k, 0);
      for (std::uint32_t j = 0; j < e; ++j) wrong[positions[j]] = 1;

      Claim* out = claims.data() + offset[i];
      for (std::uint32_t j = 0; j < k; ++j) {
        const std::uint32_t item = picked[j];
        std::uint32_t slot = golden_slot[item];
        if (wrong[j]) {
          const std::uint32_t w =
              std::uniform_int_distribution<std::uint32_t>(0, cfg.wrong_values - 1)(eng);
          slot = w >= golden_slot[item] ? w + 1 : w;
        }
        out[j] = Claim{i, item, slot_to_value[slot]};
      }
    }
  }

  // Vote counts per (item, value index), then shares.
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_items) * slots, 0);
  for (const Claim& c : claims) counts[static_cast<std::size_t>(c.item) * slots + c.value]++;

  std::unordered_map<std::uint64_t, double> probs;
  std::vector<std::uint64_t> votes;
  std::vector<ValueIdx> vids;
  for (std::uint32_t item = 0; item < n_items; ++item) {
    votes.clear();
    vids.clear();
    for (std::uint32_t v = 0; v < slots; ++v) {
      const std::uint64_t c = counts[static_cast<std::size_t>(item) * slots + v];
      if (c > 0) {
        votes.push_back(c);
        vids.push_back(v);
      }
    }
    if (votes.empty()) continue;  // item no source claimed
    const std::vector<double> shares = vote_share_probs(votes);
    for (std::size_t j = 0; j < vids.size(); ++j) {
      probs.emplace(SourceCatalog::pair_key(item, vids[j]), shares[j]);
    }
  }

  const std::uint32_t src_width = std::max<std::uint32_t>(7, decimal_width(cfg.sources));
  const std::uint32_t item_width =
      std::max<std::uint32_t>(5, decimal_width(n_items ? n_items - 1 : 0));
  std::vector<std::string> sources(cfg.sources);
  for (std::uint32_t i = 0; i < cfg.sources; ++i) {
    sources[i] = padded_id('S', static_cast<std::uint64_t>(i) + 1, src_width);
  }
  std::vector<std::string> items(n_items);
  for (std::uint32_t i = 0; i < n_items; ++i) items[i] = padded_id('I', i, item_width);

  Dataset ds{SourceCatalog(std::move(sources), std::vector<double>(cfg.sources, 1.0),
                           std::move(items), std::move(sorted_values), std::move(claims),
                           std::move(probs)),
             {},
             total,
             0};
  for (std::uint32_t i = 0; i < cfg.sources; ++i) ds.wrong_claims += errs_of[i];
  ds.golden.reserve(n_items);
  for (std::uint32_t item = 0; item < n_items; ++item) {
    ds.golden.emplace_back(ds.catalog.item_id(item), values[golden_slot[item]]);
  }
  return ds;
}

void write_dataset(const Dataset& ds, const std::string& prefix) {
  const SourceCatalog& cat = ds.catalog;

  auto open = [](const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
  };

  {
    std::ofstream out = open(prefix + ".claims.csv");
    out << "source,item,value,prob\n";
    for (const Claim& c : cat.claims()) {
      out << cat.source_id(c.source) << ',' << cat.item_id(c.item) << ',' << cat.value_id(c.value)
          << ',' << fmt_double(cat.prob(c.item, c.value)) << '\n';
    }
  }
  {
    std::ofstream out = open(prefix + ".costs.csv");
    out << "source,cost\n";
    for (std::size_t s = 0; s < cat.source_count(); ++s) {
      out << cat.source_id(static_cast<SourceIdx>(s)) << ','
          << fmt_double(cat.cost(static_cast<SourceIdx>(s))) << '\n';
    }
  }
  {
    std::ofstream out = open(prefix + ".golden.csv");
    out << "item,value\n";
    for (const auto& [item, value] : ds.golden) out << item << ',' << value << '\n';
  }
}

}  // namespace srcsel
