#include "moonlight/interval.hpp"

#include <cmath>

#include "moonlight/error.hpp"
#include "number_format.hpp"

namespace moonlight {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || !std::isfinite(lo) || lo < 0.0 || hi < lo) {
    throw ModelError("invalid interval [" + format_number(lo) + ", " + format_number(hi) + "]");
  }
}

std::string Interval::to_string() const {
  return "[" + format_number(lo_) + ", " + format_number(hi_) + "]";
}

}  // namespace moonlight
