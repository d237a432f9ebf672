#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moonlight/domain.hpp"
#include "moonlight/interval.hpp"
#include "moonlight/record.hpp"
#include "moonlight/script/ast.hpp"
#include "moonlight/time_grid.hpp"

namespace moonlight::temporal {

/// Compiled atomic comparison bound to a record schema.
///
/// Evaluation is allocation-free; division by zero raises EvaluationError
/// naming the offending subexpression.
class AtomicEvaluator {
 public:
  /// `atom` must be an Atomic formula without parameters. Throws MonitorError
  /// for variables missing from `schema`.
  AtomicEvaluator(const script::Formula& atom, const RecordSchema& schema);

  CmpOp op() const noexcept { return op_; }
  double lhs(std::span<const double> row) const { return run(lhs_, row); }
  double rhs(std::span<const double> row) const { return run(rhs_, row); }

  template <SignalDomain D>
  typename D::value_type eval(std::span<const double> row) const {
    return D::compare(op_, lhs(row), rhs(row));
  }

 private:
  struct Instr {
    script::ExprKind kind;
    double number = 0.0;
    std::size_t column = 0;
    std::size_t origin = 0;  ///< index into texts_ for Div
  };
  double run(const std::vector<Instr>& program, std::span<const double> row) const;

  CmpOp op_;
  std::vector<Instr> lhs_, rhs_;
  std::vector<std::string> texts_;
  std::size_t stack_depth_ = 0;
};

template <SignalDomain D>
typename D::value_type eval_atomic(const script::Formula& atom, std::span<const double> row,
                                   const RecordSchema& schema) {
  return AtomicEvaluator(atom, schema).eval<D>(row);
}

/// lhs until rhs: at index t, the join over t' whose time offset from t lies
/// in `window` of meet(rhs[t'], meet of lhs over [t, t')). Omitted window
/// means [0, inf). Empty candidate sets give bottom.
template <SignalDomain D>
Values<D> monitor_until(const TimeGrid& grid, const Values<D>& lhs, const Values<D>& rhs,
                        const std::optional<Interval>& window = std::nullopt);

/// Past mirror of monitor_until: lhs is required over (t', t].
template <SignalDomain D>
Values<D> monitor_since(const TimeGrid& grid, const Values<D>& lhs, const Values<D>& rhs,
                        const std::optional<Interval>& window = std::nullopt);

enum class DerivedKind { Eventually, Globally, Once, Historically };

/// Window join (eventually, once) or meet (globally, historically). Empty
/// windows give bottom for joins and top for meets.
template <SignalDomain D>
Values<D> monitor_derived_temporal(DerivedKind kind, const TimeGrid& grid, const Values<D>& s,
                                   const std::optional<Interval>& window = std::nullopt);

template <SignalDomain D>
Values<D> eventually(const TimeGrid& g, const Values<D>& s, const std::optional<Interval>& w = {}) {
  return monitor_derived_temporal<D>(DerivedKind::Eventually, g, s, w);
}
template <SignalDomain D>
Values<D> globally(const TimeGrid& g, const Values<D>& s, const std::optional<Interval>& w = {}) {
  return monitor_derived_temporal<D>(DerivedKind::Globally, g, s, w);
}
template <SignalDomain D>
Values<D> once(const TimeGrid& g, const Values<D>& s, const std::optional<Interval>& w = {}) {
  return monitor_derived_temporal<D>(DerivedKind::Once, g, s, w);
}
template <SignalDomain D>
Values<D> historically(const TimeGrid& g, const Values<D>& s,
                       const std::optional<Interval>& w = {}) {
  return monitor_derived_temporal<D>(DerivedKind::Historically, g, s, w);
}

}  // namespace moonlight::temporal
