#include "srcsel/csv.hpp"

namespace srcsel {

bool split_csv_record(std::string_view line, std::vector<std::string>& fields) {
  fields.clear();
  std::string cur;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (true) {
    cur.clear();
    if (i < n && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < n) {
        if (line[i] == '"') {
          if (i + 1 < n && line[i + 1] == '"') {
            cur.push_back('"');
            i += 2;
          } else {
            ++i;
            closed = true;
            break;
          }
        } else {
          cur.push_back(line[i++]);
        }
      }
      if (!closed) return false;
      if (i < n && line[i] != ',') return false;
    } else {
      while (i < n && line[i] != ',') {
        if (line[i] == '"') return false;
        cur.push_back(line[i++]);
      }
    }
    fields.push_back(cur);
    if (i >= n) break;
    ++i;  // skip comma; a trailing comma yields one final empty field
    if (i == n) {
      fields.emplace_back();
      break;
    }
  }
  return true;
}

std::string csv_field(std::string_view value) {
  bool needs_quotes = false;
  for (char c : value) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes && !value.empty() && (value.front() == ' ' || value.back() == ' ')) {
    needs_quotes = true;
  }
  if (!needs_quotes) return std::string(value);
  std::string out;
  out.reserve(value.size() + 2);
  out.push_back('"');
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void chomp_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace srcsel
