#pragma once

#include <limits>
#include <string>

namespace moonlight {

/// Closed interval [lo, hi] over non-negative reals; hi may be +infinity.
class Interval {
 public:
  /// [0, +infinity)
  constexpr Interval() noexcept = default;
  Interval(double lo, double hi);

  static Interval unbounded() noexcept { return Interval{}; }

  constexpr double lo() const noexcept { return lo_; }
  constexpr double hi() const noexcept { return hi_; }
  constexpr bool bounded() const noexcept {
    return hi_ != std::numeric_limits<double>::infinity();
  }
  constexpr bool contains(double d) const noexcept { return lo_ <= d && d <= hi_; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;

  std::string to_string() const;

 private:
  double lo_ = 0.0;
  double hi_ = std::numeric_limits<double>::infinity();
};

}  // namespace moonlight
