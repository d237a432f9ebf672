#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "moonlight/domain.hpp"
#include "moonlight/time_grid.hpp"

namespace moonlight {

/// Verdicts indexed [location][time].
template <class V>
using LocationSignals = std::vector<std::vector<V>>;

/// Per-location verdict signal over the monitored grid.
class MonitorResult {
 public:
  using BooleanVerdicts = LocationSignals<bool>;
  using QuantitativeVerdicts = LocationSignals<double>;

  /// Both constructors reject zero locations and rows that do not match the grid.
  MonitorResult(TimeGrid grid, BooleanVerdicts verdicts);
  MonitorResult(TimeGrid grid, QuantitativeVerdicts verdicts);

  const TimeGrid& grid() const noexcept { return grid_; }
  DomainKind domain() const noexcept {
    return std::holds_alternative<BooleanVerdicts>(verdicts_) ? DomainKind::Boolean
                                                              : DomainKind::MinMax;
  }
  std::size_t location_count() const noexcept;

  const BooleanVerdicts& boolean() const { return std::get<BooleanVerdicts>(verdicts_); }
  const QuantitativeVerdicts& quantitative() const {
    return std::get<QuantitativeVerdicts>(verdicts_);
  }

  /// Verdict as a double: booleans map to 1/0.
  double as_double(std::size_t location, std::size_t time) const;

  friend bool operator==(const MonitorResult&, const MonitorResult&) = default;

 private:
  TimeGrid grid_;
  std::variant<BooleanVerdicts, QuantitativeVerdicts> verdicts_;
};

}  // namespace moonlight
