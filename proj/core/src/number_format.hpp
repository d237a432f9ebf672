#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace moonlight {

/// Shortest decimal text that parses back to the same double; "inf"/"-inf"
/// for infinities.
inline std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return ec == std::errc{} ? std::string(buffer, end) : std::to_string(value);
}

}  // namespace moonlight
