#include "srcsel/fmt.hpp"

#include <charconv>

namespace srcsel {

std::string fmt_double(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace srcsel
