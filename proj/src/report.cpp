#include "srcsel/report.hpp"

#include <fstream>
#include <sstream>

#include "srcsel/fmt.hpp"

namespace srcsel {

namespace {

std::string opt_num(const std::optional<double>& v) { return v ? fmt_double(*v) : "null"; }

// Round rows are space-delimited; an id with whitespace or quotes gets CSV-style quoting.
std::string token(const std::string& id) {
  if (id.find_first_of(" \t\"") == std::string::npos) return id;
  std::string out = "\"";
  for (char c : id) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_warnings(std::string& out, const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) {
    out += "warning=";
    out += w;
    out += '\n';
  }
}

std::string join_ids(const SourceCatalog& catalog, const std::vector<SourceIdx>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += catalog.source_id(ids[i]);
  }
  return out;
}

}  // namespace

std::string render_kv(const ReportInputs& in) {
  const SelectionReport& sel = in.selection;
  const SourceCatalog& cat = in.catalog;
  std::string out;
  out.reserve(256 + 96 * sel.rounds.size());

  auto kv = [&](std::string_view key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };

  kv("schema", "srcsel.report.v1");
  kv("objective", objective_name(sel.objective));
  kv("budget", opt_num(sel.budget));
  kv("rho", opt_num(sel.rho));
  kv("source_prune", sel.source_prune ? "true" : "false");
  kv("sources", std::to_string(cat.source_count()));
  kv("items", std::to_string(cat.item_count()));
  kv("claims", std::to_string(cat.claim_count()));
  kv("entries", std::to_string(sel.entries));
  kv("entries_pruned", std::to_string(sel.entries_pruned));
  kv("candidates", std::to_string(sel.candidates));
  kv("cov_omega", fmt_double(sel.cov_omega));

  emit_warnings(out, in.warnings);
  emit_warnings(out, sel.warnings);
  if (in.metrics) emit_warnings(out, in.metrics->warnings);

  for (const PrunedItem& pi : sel.prune.items) {
    out += "pruned_item=";
    out += token(cat.item_id(pi.item));
    out += " values=";
    for (std::size_t j = 0; j < pi.values.size(); ++j) {
      if (j) out += ';';
      out += token(cat.value_id(pi.values[j]));
    }
    out += " mass=" + fmt_double(pi.mass);
    out += " retention=" + fmt_double(pi.retention);
    out += '\n';
  }

  for (const RoundRecord& r : sel.rounds) {
    out += "round=" + std::to_string(r.round);
    out += " source=" + token(cat.source_id(r.source));
    out += " marginal=" + fmt_double(r.marginal);
    out += " ratio=" + fmt_double(r.ratio);
    out += " cum_cov=" + fmt_double(r.cum_cov);
    out += " cum_cost=" + fmt_double(r.cum_cost);
    out += " scored=" + std::to_string(r.scored);
    out += " skipped=" + std::to_string(r.skipped);
    out += '\n';
  }

  kv("selected", join_ids(cat, sel.selected));
  kv("selected_count", std::to_string(sel.selected.size()));
  kv("final_cov", fmt_double(sel.final_cov));
  kv("final_cost", fmt_double(sel.final_cost));

  if (in.metrics) {
    const MetricResult& m = *in.metrics;
    kv("precision", opt_num(m.precision));
    kv("recall", opt_num(m.recall));
    kv("pairs_true", std::to_string(m.pairs_true));
    kv("pairs_total", std::to_string(m.pairs_total));
    kv("golden_hit", std::to_string(m.golden_hit));
    kv("golden_total", std::to_string(m.golden_total));
  }

  for (const auto& [key, value] : in.run_meta) kv(key, value);

  kv("prune_ms", fmt_double(sel.prune_ms));
  kv("select_ms", fmt_double(sel.select_ms));
  return out;
}

std::string render_text(const ReportInputs& in) {
  const SelectionReport& sel = in.selection;
  const SourceCatalog& cat = in.catalog;
  std::ostringstream out;

  out << "objective " << objective_name(sel.objective);
  if (sel.budget) out << "  budget " << fmt_double(*sel.budget);
  if (sel.rho) out << "  rho " << fmt_double(*sel.rho);
  if (sel.source_prune) out << "  source-prune on";
  out << '\n';
  out << "entries " << sel.entries;
  if (sel.entries_pruned) out << " (" << sel.entries_pruned << " pruned)";
  out << "  candidates " << sel.candidates << '\n';
  out << "coverage " << fmt_double(sel.final_cov) << " of " << fmt_double(sel.cov_omega)
      << "  cost " << fmt_double(sel.final_cost) << "  selected " << sel.selected.size() << '\n';

  if (!sel.rounds.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"round", "source", "marginal", "ratio", "cum_cov", "cum_cost", "scored",
                    "skipped"});
    for (const RoundRecord& r : sel.rounds) {
      rows.push_back({std::to_string(r.round), cat.source_id(r.source), fmt_double(r.marginal),
                      fmt_double(r.ratio), fmt_double(r.cum_cov), fmt_double(r.cum_cost),
                      std::to_string(r.scored), std::to_string(r.skipped)});
    }
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
      out << ' ';
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << ' ' << row[c] << std::string(width[c] - row[c].size(), ' ');
      }
      out << '\n';
    }
  }

  if (in.metrics) {
    const MetricResult& m = *in.metrics;
    out << "precision " << opt_num(m.precision) << " (" << m.pairs_true << "/" << m.pairs_total
        << ")  recall " << opt_num(m.recall) << " (" << m.golden_hit << "/" << m.golden_total
        << ")\n";
  }

  for (const std::string& w : in.warnings) out << "warning: " << w << '\n';
  for (const std::string& w : sel.warnings) out << "warning: " << w << '\n';
  if (in.metrics) {
    for (const std::string& w : in.metrics->warnings) out << "warning: " << w << '\n';
  }
  return out.str();
}

std::string strip_timing_lines(const std::string& report) {
  std::string out;
  out.reserve(report.size());
  std::istringstream lines(report);
  std::string line;
  while (std::getline(lines, line)) {
    const std::size_t eq = line.find('=');
    if (eq != std::string::npos && eq >= 3 && line.compare(eq - 3, 3, "_ms") == 0) continue;
    out += line;
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace srcsel
