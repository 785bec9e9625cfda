#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace fracreduce {

// Shortest decimal string that round-trips to the same double. Used by every
// textual emitter so that identical inputs produce byte-identical output.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace fracreduce
