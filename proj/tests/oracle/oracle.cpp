#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace moonlight::oracle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lattice operations written out directly, independent of the domain types.
struct Ops {
  bool boolean;
  double top() const { return boolean ? 1.0 : kInf; }
  double bottom() const { return boolean ? 0.0 : -kInf; }
  double join(double a, double b) const { return std::max(a, b); }
  double meet(double a, double b) const { return std::min(a, b); }
  double neg(double a) const { return boolean ? 1.0 - a : -a; }
};

double eval_expr(const script::Expr& e, const RecordSchema& schema, std::span<const double> row) {
  using script::ExprKind;
  switch (e.kind) {
    case ExprKind::Number: return e.number;
    case ExprKind::Variable: return row[*schema.index_of(e.name)];
    case ExprKind::Parameter: throw std::logic_error("oracle: unbound parameter " + e.name);
    case ExprKind::Negate: return -eval_expr(*e.lhs, schema, row);
    case ExprKind::Add: return eval_expr(*e.lhs, schema, row) + eval_expr(*e.rhs, schema, row);
    case ExprKind::Sub: return eval_expr(*e.lhs, schema, row) - eval_expr(*e.rhs, schema, row);
    case ExprKind::Mul: return eval_expr(*e.lhs, schema, row) * eval_expr(*e.rhs, schema, row);
    case ExprKind::Div: {
      const double d = eval_expr(*e.rhs, schema, row);
      if (d == 0.0) throw std::domain_error("oracle: division by zero");
      return eval_expr(*e.lhs, schema, row) / d;
    }
  }
  return 0.0;
}

double atomic(const Ops& ops, CmpOp op, double a, double b) {
  if (ops.boolean) {
    bool r = false;
    switch (op) {
      case CmpOp::Eq: r = a == b; break;
      case CmpOp::Ne: r = a != b; break;
      case CmpOp::Lt: r = a < b; break;
      case CmpOp::Le: r = a <= b; break;
      case CmpOp::Gt: r = a > b; break;
      case CmpOp::Ge: r = a >= b; break;
    }
    return r ? 1.0 : 0.0;
  }
  switch (op) {
    case CmpOp::Eq: return a == b ? kInf : -kInf;
    case CmpOp::Ne: return a != b ? kInf : -kInf;
    case CmpOp::Lt:
    case CmpOp::Le: return b - a;
    case CmpOp::Gt:
    case CmpOp::Ge: return a - b;
  }
  return 0.0;
}

Interval interval_of(const std::optional<script::IntervalSpec>& spec) {
  if (!spec) return Interval{};
  auto bound = [](const script::Bound& b) {
    if (b.kind == script::Bound::Kind::Infinity) return kInf;
    if (b.kind == script::Bound::Kind::Parameter) throw std::logic_error("oracle: open interval");
    return b.value;
  };
  return Interval(bound(spec->lo), bound(spec->hi));
}

std::vector<double> lengths_of(const SpatialModel& g, const std::optional<script::DistanceSpec>& d) {
  std::vector<double> out;
  for (const Edge& e : g.edges()) {
    if (!d) {
      out.push_back(1.0);
    } else if (d->kind == script::DistanceSpec::Kind::Literal) {
      out.push_back(d->literal);
    } else {
      out.push_back(e.labels[*g.edge_schema().index_of(d->label)]);
    }
  }
  return out;
}

void check_positive(const std::vector<double>& lengths) {
  for (double w : lengths) {
    if (!(w > 0)) throw BudgetExceeded("oracle: edge lengths must be strictly positive");
  }
}

// Order in which the enumerators scan edges.
std::vector<std::size_t> edge_order(const SpatialModel& g, std::uint64_t seed) {
  std::vector<std::size_t> order(g.edges().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed != 0) std::shuffle(order.begin(), order.end(), std::mt19937_64(seed));
  return order;
}

using Signals = std::vector<Column>;  // [location][time]

class Evaluator {
 public:
  Evaluator(const SpatioTemporalSignal& signal, const DynamicSpatialModel* model, Ops ops,
            const OracleBudget& budget)
      : signal_(signal), model_(model), ops_(ops), budget_(budget),
        times_(signal.grid().points().begin(), signal.grid().points().end()) {}

  Signals eval(const script::Formula& f) {
    using script::Op;
    const std::size_t L = signal_.location_count(), T = times_.size();
    Signals out(L, Column(T));
    switch (f.op) {
      case Op::Atomic:
        for (std::size_t l = 0; l < L; ++l) {
          for (std::size_t t = 0; t < T; ++t) {
            const auto row = signal_.row(l, t);
            out[l][t] = atomic(ops_, f.cmp, eval_expr(*f.lhs, signal_.schema(), row),
                               eval_expr(*f.rhs, signal_.schema(), row));
          }
        }
        return out;
      case Op::Not: {
        out = eval(*f.operands[0]);
        for (auto& c : out) for (double& v : c) v = ops_.neg(v);
        return out;
      }
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        const Signals a = eval(*f.operands[0]), b = eval(*f.operands[1]);
        for (std::size_t l = 0; l < L; ++l) {
          for (std::size_t t = 0; t < T; ++t) {
            out[l][t] = f.op == Op::And  ? ops_.meet(a[l][t], b[l][t])
                        : f.op == Op::Or ? ops_.join(a[l][t], b[l][t])
                                         : ops_.join(ops_.neg(a[l][t]), b[l][t]);
          }
        }
        return out;
      }
      case Op::Until:
      case Op::Since: {
        const Signals a = eval(*f.operands[0]), b = eval(*f.operands[1]);
        const DomainKind d = ops_.boolean ? DomainKind::Boolean : DomainKind::MinMax;
        for (std::size_t l = 0; l < L; ++l) {
          out[l] = f.op == Op::Until ? until_enum(d, times_, a[l], b[l], interval_of(f.interval))
                                     : since_enum(d, times_, a[l], b[l], interval_of(f.interval));
        }
        return out;
      }
      case Op::Eventually:
      case Op::Globally:
      case Op::Once:
      case Op::Historically: {
        const Signals a = eval(*f.operands[0]);
        const DomainKind d = ops_.boolean ? DomainKind::Boolean : DomainKind::MinMax;
        const bool join = f.op == Op::Eventually || f.op == Op::Once;
        const bool past = f.op == Op::Once || f.op == Op::Historically;
        for (std::size_t l = 0; l < L; ++l) {
          out[l] = window_enum(d, times_, a[l], interval_of(f.interval), join, past);
        }
        return out;
      }
      case Op::Reach:
      case Op::Escape:
      case Op::Somewhere:
      case Op::Everywhere: return eval_spatial(f);
      case Op::Reference: break;
    }
    throw std::logic_error("oracle: formula references must be inlined");
  }

 private:
  Signals eval_spatial(const script::Formula& f) {
    using script::Op;
    if (!model_) throw std::logic_error("oracle: spatial formula without model");
    const std::size_t L = signal_.location_count(), T = times_.size();
    const DomainKind d = ops_.boolean ? DomainKind::Boolean : DomainKind::MinMax;
    const Signals a = eval(*f.operands[0]);
    Signals b;
    if (f.op == Op::Reach) b = eval(*f.operands[1]);
    const Interval w = interval_of(f.interval);
    Signals out(L, Column(T));
    for (std::size_t t = 0; t < T; ++t) {
      const SpatialModel& g = model_->graph_at(times_[t]);
      const auto lengths = lengths_of(g, f.distance);
      Column sa(L), sb(L);
      for (std::size_t l = 0; l < L; ++l) {
        sa[l] = a[l][t];
        if (f.op == Op::Reach) sb[l] = b[l][t];
      }
      Column r;
      const Column top(L, ops_.top());
      switch (f.op) {
        case Op::Reach: r = reach_enum(d, g, lengths, sa, sb, w, budget_); break;
        case Op::Escape: r = escape_enum(d, g, lengths, sa, w, budget_); break;
        case Op::Somewhere: r = reach_enum(d, g, lengths, top, sa, w, budget_); break;
        default: {
          for (double& v : sa) v = ops_.neg(v);
          r = reach_enum(d, g, lengths, top, sa, w, budget_);
          for (double& v : r) v = ops_.neg(v);
        }
      }
      for (std::size_t l = 0; l < L; ++l) out[l][t] = r[l];
    }
    return out;
  }

  const SpatioTemporalSignal& signal_;
  const DynamicSpatialModel* model_;
  Ops ops_;
  OracleBudget budget_;
  std::vector<double> times_;
};

}  // namespace

Column until_enum(DomainKind domain, const std::vector<double>& times, const Column& lhs,
                  const Column& rhs, const Interval& w) {
  const Ops ops{domain == DomainKind::Boolean};
  const std::size_t n = times.size();
  Column out(n, ops.bottom());
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = t; u < n; ++u) {
      if (!w.contains(times[u] - times[t])) continue;
      double v = rhs[u];
      for (std::size_t k = t; k < u; ++k) v = ops.meet(v, lhs[k]);
      out[t] = ops.join(out[t], v);
    }
  }
  return out;
}

Column since_enum(DomainKind domain, const std::vector<double>& times, const Column& lhs,
                  const Column& rhs, const Interval& w) {
  const Ops ops{domain == DomainKind::Boolean};
  const std::size_t n = times.size();
  Column out(n, ops.bottom());
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = 0; u <= t; ++u) {
      if (!w.contains(times[t] - times[u])) continue;
      double v = rhs[u];
      for (std::size_t k = u + 1; k <= t; ++k) v = ops.meet(v, lhs[k]);
      out[t] = ops.join(out[t], v);
    }
  }
  return out;
}

Column window_enum(DomainKind domain, const std::vector<double>& times, const Column& s,
                   const Interval& w, bool join, bool past) {
  const Ops ops{domain == DomainKind::Boolean};
  const std::size_t n = times.size();
  Column out(n, join ? ops.bottom() : ops.top());
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = 0; u < n; ++u) {
      const double offset = past ? times[t] - times[u] : times[u] - times[t];
      if (offset < 0 || !w.contains(offset)) continue;
      out[t] = join ? ops.join(out[t], s[u]) : ops.meet(out[t], s[u]);
    }
  }
  return out;
}

std::vector<std::vector<double>> distance_matrix_enum(const SpatialModel& g,
                                                      const std::vector<double>& lengths) {
  const std::size_t n = g.location_count();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  std::vector<char> visited(n, 0);
  std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t src, std::size_t x,
                                                                   double len) {
    d[src][x] = std::min(d[src][x], len);
    visited[x] = 1;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const Edge& edge = g.edges()[e];
      if (edge.source == x && !visited[edge.target]) walk(src, edge.target, len + lengths[e]);
    }
    visited[x] = 0;
  };
  for (std::size_t src = 0; src < n; ++src) walk(src, src, 0.0);
  return d;
}

Column reach_enum(DomainKind domain, const SpatialModel& g, const std::vector<double>& lengths,
                  const Column& s1, const Column& s2, const Interval& w, const OracleBudget& budget) {
  const Ops ops{domain == DomainKind::Boolean};
  const std::size_t n = g.location_count();
  if (n > budget.max_locations) throw BudgetExceeded("oracle: too many locations");
  check_positive(lengths);
  const double min_len = lengths.empty() ? 1.0 : *std::min_element(lengths.begin(), lengths.end());

  // Bounded intervals: every walk with length <= hi. Unbounded ones: any
  // walk can be cut to one that first reaches lo and then follows a simple
  // path (dropping cycles never lowers the meet), so after reaching lo only
  // unvisited locations are entered.
  if (w.bounded() && w.hi() > budget.max_distance) throw BudgetExceeded("oracle: interval too wide");
  const double max_edges = w.bounded() ? std::floor(w.hi() / min_len)
                                       : std::floor(w.lo() / min_len) + 1 + static_cast<double>(n);
  if (max_edges > static_cast<double>(budget.max_path_length)) {
    throw BudgetExceeded("oracle: walks would exceed the path-length budget");
  }

  const auto order = edge_order(g, budget.shuffle_seed);
  Column out(n, ops.bottom());
  std::vector<char> visited(n, 0);
  std::function<void(std::size_t, std::size_t, double, double)> walk =
      [&](std::size_t start, std::size_t x, double len, double prefix) {
        if (w.contains(len)) out[start] = ops.join(out[start], ops.meet(prefix, s2[x]));
        const bool simple = !w.bounded() && len >= w.lo();
        if (simple) visited[x] = 1;
        const double next_prefix = ops.meet(prefix, s1[x]);
        for (std::size_t e : order) {
          const Edge& edge = g.edges()[e];
          if (edge.source != x) continue;
          const double nl = len + lengths[e];
          if (w.bounded() && nl > w.hi()) continue;
          if (simple && visited[edge.target]) continue;
          walk(start, edge.target, nl, next_prefix);
        }
        if (simple) visited[x] = 0;
      };
  for (std::size_t l = 0; l < n; ++l) walk(l, l, 0.0, ops.top());
  return out;
}

Column escape_enum(DomainKind domain, const SpatialModel& g, const std::vector<double>& lengths,
                   const Column& s, const Interval& w, const OracleBudget& budget) {
  const Ops ops{domain == DomainKind::Boolean};
  const std::size_t n = g.location_count();
  if (n > budget.max_locations) throw BudgetExceeded("oracle: too many locations");
  check_positive(lengths);
  const auto d = distance_matrix_enum(g, lengths);

  // Removing a cycle from a walk never lowers its meet, so simple paths
  // cover every candidate endpoint value.
  const auto order = edge_order(g, budget.shuffle_seed);
  Column out(n, ops.bottom());
  std::vector<char> visited(n, 0);
  std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t start,
                                                                   std::size_t x, double acc) {
    acc = ops.meet(acc, s[x]);
    if (std::isfinite(d[start][x]) && w.contains(d[start][x])) out[start] = ops.join(out[start], acc);
    visited[x] = 1;
    for (std::size_t e : order) {
      const Edge& edge = g.edges()[e];
      if (edge.source == x && !visited[edge.target]) walk(start, edge.target, acc);
    }
    visited[x] = 0;
  };
  for (std::size_t l = 0; l < n; ++l) walk(l, l, ops.top());
  return out;
}

MonitorResult oracle_monitor(const script::Formula& formula, const SpatioTemporalSignal& signal,
                             const DynamicSpatialModel* model, DomainKind domain,
                             const OracleBudget& budget) {
  if (signal.location_count() > budget.max_locations) throw BudgetExceeded("oracle: too many locations");
  if (signal.grid().size() > budget.max_time_points) throw BudgetExceeded("oracle: too many time points");
  Evaluator evaluator(signal, model, Ops{domain == DomainKind::Boolean}, budget);
  const Signals out = evaluator.eval(formula);
  if (domain == DomainKind::Boolean) {
    MonitorResult::BooleanVerdicts v(out.size());
    for (std::size_t l = 0; l < out.size(); ++l) {
      for (double x : out[l]) v[l].push_back(x != 0.0);
    }
    return MonitorResult(signal.grid(), std::move(v));
  }
  return MonitorResult(signal.grid(), MonitorResult::QuantitativeVerdicts(out));
}

}  // namespace moonlight::oracle
