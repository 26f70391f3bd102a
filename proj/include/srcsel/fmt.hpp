#pragma once

#include <string>

namespace srcsel {

// Shortest decimal string that round-trips the double (to_chars general form).
// Report and data files use this everywhere so output is byte-deterministic.
std::string fmt_double(double x);

}  // namespace srcsel
