#include "moonlight/temporal.hpp"

#include <algorithm>
#include <deque>

#include "moonlight/error.hpp"
#include "moonlight/script/printer.hpp"

namespace moonlight::temporal {

// ---------------------------------------------------------------------------
// Atomic comparisons

AtomicEvaluator::AtomicEvaluator(const script::Formula& atom, const RecordSchema& schema)
    : op_(atom.cmp) {
  if (atom.op != script::Op::Atomic) throw MonitorError("not an atomic formula");
  // Columns are resolved once; compile() needs the schema.
  struct Compiler {
    const RecordSchema& schema;
    AtomicEvaluator& self;
    std::size_t depth = 0, max_depth = 0;

    void emit(std::vector<Instr>& out, const script::Expr& e) {
      using script::ExprKind;
      switch (e.kind) {
        case ExprKind::Number:
          out.push_back({e.kind, e.number});
          push();
          return;
        case ExprKind::Variable: {
          auto column = schema.index_of(e.name);
          if (!column) throw MonitorError("signal has no variable '" + e.name + "'");
          out.push_back({e.kind, 0.0, *column});
          push();
          return;
        }
        case ExprKind::Parameter:
          throw MonitorError("unbound parameter '" + e.name + "' in atomic formula");
        case ExprKind::Negate:
          emit(out, *e.lhs);
          out.push_back({e.kind});
          return;
        default: {
          emit(out, *e.lhs);
          emit(out, *e.rhs);
          Instr instr{e.kind};
          if (e.kind == ExprKind::Div) {
            instr.origin = self.texts_.size();
            self.texts_.push_back(script::to_string(e));
          }
          out.push_back(instr);
          --depth;
        }
      }
    }
    void push() { max_depth = std::max(max_depth, ++depth); }
  };
  Compiler lc{schema, *this};
  lc.emit(lhs_, *atom.lhs);
  Compiler rc{schema, *this};
  rc.emit(rhs_, *atom.rhs);
  stack_depth_ = std::max(lc.max_depth, rc.max_depth);
}

double AtomicEvaluator::run(const std::vector<Instr>& program, std::span<const double> row) const {
  using script::ExprKind;
  constexpr std::size_t kInline = 16;
  double inline_stack[kInline] = {};
  std::vector<double> heap_stack;
  double* stack = inline_stack;
  if (stack_depth_ > kInline) {
    heap_stack.resize(stack_depth_);
    stack = heap_stack.data();
  }
  std::size_t top = 0;
  for (const Instr& in : program) {
    switch (in.kind) {
      case ExprKind::Number: stack[top++] = in.number; break;
      case ExprKind::Variable: stack[top++] = row[in.column]; break;
      case ExprKind::Parameter: break;
      case ExprKind::Negate: stack[top - 1] = -stack[top - 1]; break;
      case ExprKind::Add: --top; stack[top - 1] += stack[top]; break;
      case ExprKind::Sub: --top; stack[top - 1] -= stack[top]; break;
      case ExprKind::Mul: --top; stack[top - 1] *= stack[top]; break;
      case ExprKind::Div:
        --top;
        if (stack[top] == 0.0) {
          throw EvaluationError("division by zero in " + texts_[in.origin]);
        }
        stack[top - 1] /= stack[top];
        break;
    }
  }
  return stack[0];
}

// ---------------------------------------------------------------------------
// Windows

namespace {

struct Window {
  std::size_t begin, end;  // half-open
};

// For every i, the indices j with times[j] - times[i] inside [lo, hi]. Both
// endpoints are non-decreasing in i, so two pointers suffice.
std::vector<Window> future_windows(std::span<const double> times, const Interval& w) {
  const std::size_t n = times.size();
  std::vector<Window> out(n);
  std::size_t b = 0, e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    b = std::max(b, i);
    while (b < n && times[b] - times[i] < w.lo()) ++b;
    e = std::max(e, b);
    while (e < n && times[e] - times[i] <= w.hi()) ++e;
    out[i] = {b, e};
  }
  return out;
}

// Sliding join (Join = true) or meet over monotone windows.
template <SignalDomain D, bool Join>
Values<D> sliding(const Values<D>& s, const std::vector<Window>& windows) {
  using V = typename D::value_type;
  const std::size_t n = windows.size();
  Values<D> out(n, Join ? D::bottom() : D::top());
  std::deque<std::size_t> dq;  // candidate indices, values strictly "worse" towards the back
  std::size_t pushed = 0;
  auto dominated = [&](V older, V newer) {
    return Join ? !D::less(newer, older) : !D::less(older, newer);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Window w = windows[i];
    pushed = std::max(pushed, w.begin);
    while (pushed < w.end) {
      while (!dq.empty() && dominated(s[dq.back()], s[pushed])) dq.pop_back();
      dq.push_back(pushed++);
    }
    while (!dq.empty() && dq.front() < w.begin) dq.pop_front();
    if (w.begin < w.end && !dq.empty()) out[i] = s[dq.front()];
  }
  return out;
}

template <SignalDomain D>
void check_sizes(const TimeGrid& grid, const Values<D>& s) {
  if (s.size() != grid.size()) {
    throw MonitorError("grid mismatch: " + std::to_string(s.size()) + " values for " +
                       std::to_string(grid.size()) + " time points");
  }
}

template <SignalDomain D>
Values<D> until_on(std::span<const double> times, const Values<D>& lhs, const Values<D>& rhs,
                   const Interval& w) {
  const std::size_t n = times.size();
  const auto windows = future_windows(times, w);

  // meet of lhs over [i, begin(i)), the part of the prefix before the window.
  std::vector<Window> lead(n);
  for (std::size_t i = 0; i < n; ++i) lead[i] = {i, windows[i].begin};
  const Values<D> head = sliding<D, false>(lhs, lead);

  Values<D> out(n, D::bottom());
  if (!w.bounded()) {
    // suffix[j]: unbounded until from j, by the backward recurrence
    // suffix[j] = rhs[j] join (lhs[j] meet suffix[j+1]).
    Values<D> suffix(n + 1, D::bottom());
    for (std::size_t j = n; j-- > 0;) {
      suffix[j] = D::join(rhs[j], D::meet(lhs[j], suffix[j + 1]));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Window win = windows[i];
      if (win.begin < win.end) out[i] = D::meet(head[i], suffix[win.begin]);
    }
    return out;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Window win = windows[i];
    auto acc = D::bottom();
    auto prefix = D::top();
    for (std::size_t j = win.begin; j < win.end; ++j) {
      acc = D::join(acc, D::meet(rhs[j], prefix));
      prefix = D::meet(prefix, lhs[j]);
      // Later candidates are bounded by prefix.
      if (!D::less(acc, prefix)) break;
    }
    out[i] = D::meet(head[i], acc);
  }
  return out;
}

// Reversal with negated times turns past windows into future windows.
std::vector<double> mirrored(std::span<const double> times) {
  std::vector<double> out(times.rbegin(), times.rend());
  for (double& t : out) t = -t;
  return out;
}

template <class T>
std::vector<T> reversed(const std::vector<T>& v) {
  return std::vector<T>(v.rbegin(), v.rend());
}

}  // namespace

template <SignalDomain D>
Values<D> monitor_until(const TimeGrid& grid, const Values<D>& lhs, const Values<D>& rhs,
                        const std::optional<Interval>& window) {
  check_sizes<D>(grid, lhs);
  check_sizes<D>(grid, rhs);
  return until_on<D>(grid.points(), lhs, rhs, window.value_or(Interval{}));
}

template <SignalDomain D>
Values<D> monitor_since(const TimeGrid& grid, const Values<D>& lhs, const Values<D>& rhs,
                        const std::optional<Interval>& window) {
  check_sizes<D>(grid, lhs);
  check_sizes<D>(grid, rhs);
  const auto times = mirrored(grid.points());
  return reversed(
      until_on<D>(times, reversed(lhs), reversed(rhs), window.value_or(Interval{})));
}

template <SignalDomain D>
Values<D> monitor_derived_temporal(DerivedKind kind, const TimeGrid& grid, const Values<D>& s,
                                   const std::optional<Interval>& window) {
  check_sizes<D>(grid, s);
  const Interval w = window.value_or(Interval{});
  switch (kind) {
    case DerivedKind::Eventually: return sliding<D, true>(s, future_windows(grid.points(), w));
    case DerivedKind::Globally: return sliding<D, false>(s, future_windows(grid.points(), w));
    case DerivedKind::Once:
      return reversed(sliding<D, true>(reversed(s), future_windows(mirrored(grid.points()), w)));
    case DerivedKind::Historically:
      return reversed(sliding<D, false>(reversed(s), future_windows(mirrored(grid.points()), w)));
  }
  return s;
}

#define MOONLIGHT_INSTANTIATE(D)                                                               \
  template Values<D> monitor_until<D>(const TimeGrid&, const Values<D>&, const Values<D>&,     \
                                      const std::optional<Interval>&);                         \
  template Values<D> monitor_since<D>(const TimeGrid&, const Values<D>&, const Values<D>&,     \
                                      const std::optional<Interval>&);                         \
  template Values<D> monitor_derived_temporal<D>(DerivedKind, const TimeGrid&, const Values<D>&, \
                                                 const std::optional<Interval>&);

MOONLIGHT_INSTANTIATE(BooleanDomain)
MOONLIGHT_INSTANTIATE(MinMaxDomain)

#undef MOONLIGHT_INSTANTIATE

}  // namespace moonlight::temporal
