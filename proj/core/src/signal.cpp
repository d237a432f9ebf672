#include "moonlight/signal.hpp"

#include "moonlight/error.hpp"

namespace moonlight {

SpatioTemporalSignal::SpatioTemporalSignal(RecordSchema schema, TimeGrid grid,
                                           std::size_t locations, std::vector<double> values)
    : schema_(std::move(schema)),
      grid_(std::move(grid)),
      locations_(locations),
      values_(std::move(values)) {
  if (locations_ == 0) throw ModelError("signal needs at least one location");
  const std::size_t expected = locations_ * grid_.size() * schema_.size();
  if (values_.size() != expected) {
    throw ModelError("signal holds " + std::to_string(values_.size()) + " values, expected " +
                     std::to_string(expected));
  }
  const std::size_t width = schema_.size();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    check_field_value(schema_[i % width], values_[i]);
  }
}

}  // namespace moonlight
