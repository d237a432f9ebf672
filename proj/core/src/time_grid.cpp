#include "moonlight/time_grid.hpp"

#include <cmath>

#include "moonlight/error.hpp"

namespace moonlight {

TimeGrid::TimeGrid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw ModelError("time grid needs at least one point");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double t = points_[i];
    if (!std::isfinite(t) || t < 0.0) {
      throw ModelError("time point " + std::to_string(i) + " is negative or not finite");
    }
    if (i > 0 && !(points_[i - 1] < t)) {
      throw ModelError("time points must be strictly increasing (index " + std::to_string(i) +
                       ")");
    }
  }
}

}  // namespace moonlight
