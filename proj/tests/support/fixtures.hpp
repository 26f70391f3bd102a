#pragma once

// The headquarters corpus: five companies, seven sources, 32 claims. Small
// enough to check every number by hand, rich enough to exercise conflicting
// values, a zero-probability value (Microsoft.TX) and skewed truth
// probabilities. Reused across the unit tests and the acceptance suite.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "srcsel/catalog.hpp"
#include "srcsel/csv.hpp"
#include "srcsel/index.hpp"

namespace fixtures {

inline constexpr std::string_view kHqClaimsCsv =
    "source,item,value,prob\n"
    "S_1,AT&T,DA,0.64\n"
    "S_1,Google,CA,0.74\n"
    "S_1,Microsoft,WA,0.99\n"
    "S_1,IBM,WA,0.34\n"
    "S_1,Apple,CA,0.93\n"
    "S_2,AT&T,DA,0.64\n"
    "S_2,Google,LA,0.26\n"
    "S_2,Microsoft,WA,0.99\n"
    "S_2,IBM,NY,0.58\n"
    "S_2,Apple,CA,0.93\n"
    "S_3,AT&T,DA,0.64\n"
    "S_3,Microsoft,TX,0\n"
    "S_3,IBM,NY,0.58\n"
    "S_3,Apple,CA,0.93\n"
    "S_4,AT&T,TE,0.23\n"
    "S_4,Google,LA,0.26\n"
    "S_4,Microsoft,WA,0.99\n"
    "S_4,IBM,BS,0.08\n"
    "S_4,Apple,CA,0.93\n"
    "S_5,Google,CA,0.74\n"
    "S_5,Microsoft,BJ,0.01\n"
    "S_5,IBM,NY,0.58\n"
    "S_5,Apple,NY,0.02\n"
    "S_6,AT&T,DA,0.64\n"
    "S_6,Google,CA,0.74\n"
    "S_6,Microsoft,BJ,0.01\n"
    "S_6,IBM,NY,0.58\n"
    "S_7,AT&T,NY,0.13\n"
    "S_7,Google,CA,0.74\n"
    "S_7,Microsoft,WA,0.99\n"
    "S_7,IBM,NY,0.58\n"
    "S_7,Apple,WA,0.05\n";

// One golden value per item: the highest-probability value.
inline constexpr std::string_view kHqGoldenCsv =
    "item,value\n"
    "AT&T,DA\n"
    "Google,CA\n"
    "Microsoft,WA\n"
    "IBM,NY\n"
    "Apple,CA\n";

inline srcsel::SourceCatalog make_hq_catalog() {
  srcsel::CatalogBuilder builder;
  std::string_view rest = kHqClaimsCsv;
  std::vector<std::string> fields;
  bool header = true;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    const std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    if (header) {
      header = false;
      continue;
    }
    if (!srcsel::split_csv_record(line, fields) || fields.size() != 4) {
      throw std::logic_error("bad fixture row");
    }
    double prob = 0;
    std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), prob);
    builder.add_claim(fields[0], fields[1], fields[2], prob);
  }
  return builder.build();
}

inline srcsel::CoverageIndex make_hq_index(const srcsel::SourceCatalog& catalog) {
  return srcsel::build_index(catalog, srcsel::full_query(catalog));
}

inline srcsel::SourceIdx hq_source(const srcsel::SourceCatalog& catalog, std::string_view id) {
  const auto s = catalog.find_source(id);
  if (!s) throw std::logic_error("fixture source missing");
  return *s;
}

// Golden rows as the evaluate() input shape.
inline std::vector<std::pair<std::string, std::string>> hq_golden_rows() {
  return {{"AT&T", "DA"}, {"Google", "CA"}, {"Microsoft", "WA"}, {"IBM", "NY"}, {"Apple", "CA"}};
}

/// Temp directory for tests that need real files; removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "srcsel_test_XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    root_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(root_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string path() const { return root_.string(); }
  std::string path(std::string_view name) const { return (root_ / name).string(); }

  std::string write(std::string_view name, std::string_view content) const {
    const std::string p = path(name);
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }

 private:
  std::filesystem::path root_;
};

}  // namespace fixtures
