#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "moonlight/record.hpp"
#include "moonlight/time_grid.hpp"

namespace moonlight {

/// Per-location, step-wise record-valued time series on a shared grid.
///
/// Values are stored location-major: location, then time, then field.
class SpatioTemporalSignal {
 public:
  SpatioTemporalSignal(RecordSchema schema, TimeGrid grid, std::size_t locations,
                       std::vector<double> values);

  const RecordSchema& schema() const noexcept { return schema_; }
  const TimeGrid& grid() const noexcept { return grid_; }
  std::size_t location_count() const noexcept { return locations_; }

  double value(std::size_t location, std::size_t time, std::size_t field) const noexcept {
    return values_[(location * grid_.size() + time) * schema_.size() + field];
  }
  std::span<const double> row(std::size_t location, std::size_t time) const noexcept {
    return {values_.data() + (location * grid_.size() + time) * schema_.size(), schema_.size()};
  }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const SpatioTemporalSignal&, const SpatioTemporalSignal&) = default;

 private:
  RecordSchema schema_;
  TimeGrid grid_;
  std::size_t locations_;
  std::vector<double> values_;
};

}  // namespace moonlight
