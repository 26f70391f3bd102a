#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srcsel {

// Parse or validation failure tied to an input line. Loaders rethrow these
// with the file path prepended, so user-facing messages read "file:line: msg".
struct ParseError : std::runtime_error {
  std::uint32_t line;
  ParseError(std::uint32_t line_no, const std::string& msg)
      : std::runtime_error(msg), line(line_no) {}
};

// Splits one CSV record into fields. Handles RFC 4180 quoting, where a quoted
// field may contain commas and doubled quotes; fields may not span lines.
// Returns false on unbalanced quotes or trailing garbage after a closing quote.
bool split_csv_record(std::string_view line, std::vector<std::string>& fields);

// Renders a field for CSV output, quoting only when the content requires it.
std::string csv_field(std::string_view value);

// Strips a trailing carriage return in place (files written on Windows).
void chomp_cr(std::string& line);

}  // namespace srcsel
