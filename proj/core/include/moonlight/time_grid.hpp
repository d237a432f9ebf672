#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace moonlight {

/// Strictly increasing, non-empty sequence of non-negative sample times.
class TimeGrid {
 public:
  explicit TimeGrid(std::vector<double> points);

  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t i) const noexcept { return points_[i]; }
  double front() const noexcept { return points_.front(); }
  double back() const noexcept { return points_.back(); }
  std::span<const double> points() const noexcept { return points_; }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  std::vector<double> points_;
};

}  // namespace moonlight
