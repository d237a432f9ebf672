#include "moonlight/result.hpp"

#include "moonlight/error.hpp"

namespace moonlight {
namespace {

template <class V>
void check_shape(const TimeGrid& grid, const LocationSignals<V>& verdicts) {
  if (verdicts.empty()) throw ModelError("monitor result needs at least one location");
  for (std::size_t l = 0; l < verdicts.size(); ++l) {
    if (verdicts[l].size() != grid.size()) {
      throw ModelError("location " + std::to_string(l) + " has " +
                       std::to_string(verdicts[l].size()) + " verdicts for a grid of " +
                       std::to_string(grid.size()));
    }
  }
}

}  // namespace

MonitorResult::MonitorResult(TimeGrid grid, BooleanVerdicts verdicts)
    : grid_(std::move(grid)), verdicts_(std::move(verdicts)) {
  check_shape(grid_, boolean());
}

MonitorResult::MonitorResult(TimeGrid grid, QuantitativeVerdicts verdicts)
    : grid_(std::move(grid)), verdicts_(std::move(verdicts)) {
  check_shape(grid_, quantitative());
}

std::size_t MonitorResult::location_count() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, verdicts_);
}

double MonitorResult::as_double(std::size_t location, std::size_t time) const {
  if (domain() == DomainKind::Boolean) return boolean()[location][time] ? 1.0 : 0.0;
  return quantitative()[location][time];
}

}  // namespace moonlight
