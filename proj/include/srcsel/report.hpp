#pragma once

#include <string>
#include <utility>
#include <vector>

#include "srcsel/catalog.hpp"
#include "srcsel/eval.hpp"
#include "srcsel/selection.hpp"

namespace srcsel {

struct ReportInputs {
  const SelectionReport& selection;
  const SourceCatalog& catalog;
  const MetricResult* metrics = nullptr;  // optional, adds the metric block
  std::vector<std::string> warnings;      // caller-level (ingest, query) warnings, emitted first
  std::vector<std::pair<std::string, std::string>> run_meta;  // extra key=value rows
};

// Machine-readable report: one key=value per line, fixed key order, doubles in
// shortest round-trip form, absent optionals as the literal "null". Round rows
// pack their fields space-separated on one line; ids containing whitespace or
// quotes are CSV-quoted there. All *_ms keys come last so two runs of the same
// configuration match byte-for-byte once timing lines are dropped.
std::string render_kv(const ReportInputs& in);

// Human-readable summary with a per-round table.
std::string render_text(const ReportInputs& in);

// The report minus its timing lines (keys ending in "_ms").
std::string strip_timing_lines(const std::string& report);

void write_file(const std::string& path, const std::string& content);

}  // namespace srcsel
