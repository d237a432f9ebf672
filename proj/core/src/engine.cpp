#include "moonlight/engine.hpp"

#include <algorithm>
#include <map>
#include <variant>

#include "moonlight/error.hpp"
#include "moonlight/parallel.hpp"
#include "moonlight/spatial.hpp"
#include "moonlight/temporal.hpp"

namespace moonlight {
namespace {

using script::Formula;
using script::Op;

Interval to_interval(const std::optional<script::IntervalSpec>& spec) {
  if (!spec) return Interval{};
  auto value = [](const script::Bound& b) {
    switch (b.kind) {
      case script::Bound::Kind::Number: return b.value;
      case script::Bound::Kind::Infinity: return std::numeric_limits<double>::infinity();
      case script::Bound::Kind::Parameter: break;
    }
    throw MonitorError("interval bound '" + b.param + "' is not instantiated");
  };
  return Interval(value(spec->lo), value(spec->hi));
}

// Distances needed by one (frame, distance expression) pair.
struct FrameDistances {
  std::variant<std::vector<HopDistance::value_type>, std::vector<RealDistance::value_type>> lengths;
  std::optional<spatial::DistanceMatrix<HopDistance>> hop_matrix;
  std::optional<spatial::DistanceMatrix<RealDistance>> real_matrix;
};

struct DistanceUse {
  spatial::DistanceExpr dexpr;
  bool needs_matrix = false;
};

void collect_distances(const Formula& f, std::map<std::string, DistanceUse>& uses) {
  if (script::is_spatial(f.op)) {
    auto dexpr = spatial::DistanceExpr::from_spec(f.distance);
    auto& use = uses.try_emplace(dexpr.key(), DistanceUse{dexpr}).first->second;
    if (f.op == Op::Escape) use.needs_matrix = true;
  }
  for (const auto& child : f.operands) collect_distances(*child, uses);
}

class Evaluator {
 public:
  Evaluator(const SpatioTemporalSignal& signal, const DynamicSpatialModel* model,
            const EngineOptions& options)
      : signal_(signal), model_(model), workers_(options.workers), stats_(options.stats) {}

  void prepare(const Formula& f) {
    std::map<std::string, DistanceUse> uses;
    collect_distances(f, uses);
    if (uses.empty()) return;
    if (!model_) throw MonitorError("formula has spatial operators but no spatial model was given");
    const TimeGrid& grid = signal_.grid();
    frame_of_time_.resize(grid.size());
    for (std::size_t t = 0; t < grid.size(); ++t) {
      try {
        frame_of_time_[t] = model_->frame_index_at(grid[t]);
      } catch (const QueryError& e) {
        throw MonitorError(std::string("spatial model does not cover the time grid: ") + e.what());
      }
    }
    for (const auto& [key, use] : uses) {
      for (std::size_t t = 0; t < grid.size(); ++t) {
        const std::size_t frame = frame_of_time_[t];
        auto [it, inserted] = cache_.try_emplace({frame, key});
        if (!inserted) {
          if (stats_) ++stats_->cache_hits;
          continue;
        }
        if (stats_) ++stats_->cache_misses;
        it->second = compute(*model_->frame(frame).graph, use);
      }
    }
  }

  template <SignalDomain D>
  LocationSignals<typename D::value_type> eval(const Formula& f) {
    using V = typename D::value_type;
    const std::size_t L = signal_.location_count();
    const std::size_t T = signal_.grid().size();
    LocationSignals<V> out(L);

    switch (f.op) {
      case Op::Atomic: {
        const temporal::AtomicEvaluator atom(f, signal_.schema());
        parallel_for(L, [&](std::size_t l) {
          out[l].resize(T);
          for (std::size_t t = 0; t < T; ++t) out[l][t] = atom.eval<D>(signal_.row(l, t));
        }, workers_);
        return out;
      }
      case Op::Not: {
        out = eval<D>(*f.operands[0]);
        for (auto& row : out) {
          for (std::size_t t = 0; t < T; ++t) row[t] = D::negation(row[t]);
        }
        return out;
      }
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        out = eval<D>(*f.operands[0]);
        const auto rhs = eval<D>(*f.operands[1]);
        for (std::size_t l = 0; l < L; ++l) {
          for (std::size_t t = 0; t < T; ++t) {
            const V a = out[l][t], b = rhs[l][t];
            out[l][t] = f.op == Op::And  ? D::meet(a, b)
                        : f.op == Op::Or ? D::join(a, b)
                                         : D::join(D::negation(a), b);
          }
        }
        return out;
      }
      case Op::Until:
      case Op::Since: {
        const auto lhs = eval<D>(*f.operands[0]);
        const auto rhs = eval<D>(*f.operands[1]);
        const Interval w = to_interval(f.interval);
        parallel_for(L, [&](std::size_t l) {
          out[l] = f.op == Op::Until ? temporal::monitor_until<D>(signal_.grid(), lhs[l], rhs[l], w)
                                     : temporal::monitor_since<D>(signal_.grid(), lhs[l], rhs[l], w);
        }, workers_);
        return out;
      }
      case Op::Eventually:
      case Op::Globally:
      case Op::Once:
      case Op::Historically: {
        const auto s = eval<D>(*f.operands[0]);
        const Interval w = to_interval(f.interval);
        const auto kind = f.op == Op::Eventually ? temporal::DerivedKind::Eventually
                          : f.op == Op::Globally ? temporal::DerivedKind::Globally
                          : f.op == Op::Once     ? temporal::DerivedKind::Once
                                                 : temporal::DerivedKind::Historically;
        parallel_for(L, [&](std::size_t l) {
          out[l] = temporal::monitor_derived_temporal<D>(kind, signal_.grid(), s[l], w);
        }, workers_);
        return out;
      }
      case Op::Reach:
      case Op::Escape:
      case Op::Somewhere:
      case Op::Everywhere: return eval_spatial<D>(f);
      case Op::Reference: break;
    }
    throw MonitorError("formula reference '" + f.name + "' was not inlined");
  }

 private:
  static FrameDistances compute(const SpatialModel& g, const DistanceUse& use) {
    FrameDistances fd;
    if (spatial::distance_kind(use.dexpr, g.edge_schema()) == spatial::DistanceKind::Hop) {
      auto lengths = spatial::edge_lengths<HopDistance>(g, use.dexpr);
      if (use.needs_matrix) fd.hop_matrix = spatial::shortest_distance_matrix<HopDistance>(g, lengths);
      fd.lengths = std::move(lengths);
    } else {
      auto lengths = spatial::edge_lengths<RealDistance>(g, use.dexpr);
      if (use.needs_matrix) {
        fd.real_matrix = spatial::shortest_distance_matrix<RealDistance>(g, lengths);
      }
      fd.lengths = std::move(lengths);
    }
    return fd;
  }

  template <SignalDomain D, DistanceDomain Dist>
  static Values<D> apply(const Formula& f, const SpatialModel& g,
                         const std::vector<typename Dist::value_type>& lengths,
                         const std::optional<spatial::DistanceMatrix<Dist>>& matrix,
                         const Values<D>& a, const Values<D>& b, const Interval& w,
                         spatial::ReachStats& rs) {
    switch (f.op) {
      case Op::Reach: return spatial::monitor_reach<D, Dist>(g, lengths, a, b, w, &rs);
      case Op::Escape: return spatial::monitor_escape<D, Dist>(g, *matrix, a, w);
      case Op::Somewhere: return spatial::somewhere<D, Dist>(g, lengths, a, w, &rs);
      default: return spatial::everywhere<D, Dist>(g, lengths, a, w, &rs);
    }
  }

  template <SignalDomain D>
  LocationSignals<typename D::value_type> eval_spatial(const Formula& f) {
    using V = typename D::value_type;
    const std::size_t L = signal_.location_count();
    const std::size_t T = signal_.grid().size();
    const auto lhs = eval<D>(*f.operands[0]);
    LocationSignals<V> rhs;
    if (f.op == Op::Reach) rhs = eval<D>(*f.operands[1]);
    const Interval w = to_interval(f.interval);
    const std::string key = spatial::DistanceExpr::from_spec(f.distance).key();

    // Evaluate per time into separate slices, then transpose.
    std::vector<Values<D>> slices(T);
    std::vector<spatial::ReachStats> reach_stats(T);
    parallel_for(T, [&](std::size_t t) {
      Values<D> a(L), b;
      for (std::size_t l = 0; l < L; ++l) a[l] = lhs[l][t];
      if (f.op == Op::Reach) {
        b.resize(L);
        for (std::size_t l = 0; l < L; ++l) b[l] = rhs[l][t];
      }
      const std::size_t frame = frame_of_time_[t];
      const SpatialModel& g = *model_->frame(frame).graph;
      const FrameDistances& fd = cache_.at({frame, key});
      if (const auto* hop = std::get_if<std::vector<HopDistance::value_type>>(&fd.lengths)) {
        slices[t] = apply<D, HopDistance>(f, g, *hop, fd.hop_matrix, a, b, w, reach_stats[t]);
      } else {
        slices[t] = apply<D, RealDistance>(f, g, std::get<1>(fd.lengths), fd.real_matrix, a, b, w,
                                           reach_stats[t]);
      }
    }, workers_);

    LocationSignals<V> out(L, std::vector<V>(T));
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t l = 0; l < L; ++l) out[l][t] = slices[t][l];
    }
    if (stats_) {
      stats_->spatial_evaluations += T;
      for (const auto& rs : reach_stats) {
        stats_->max_reach_rounds = std::max(stats_->max_reach_rounds, rs.rounds);
        stats_->reach_states += rs.entries;
      }
    }
    return out;
  }

  const SpatioTemporalSignal& signal_;
  const DynamicSpatialModel* model_;
  unsigned workers_;
  EngineStats* stats_;
  std::vector<std::size_t> frame_of_time_;
  std::map<std::pair<std::size_t, std::string>, FrameDistances> cache_;
};

}  // namespace

MonitorResult monitor_formula(const Formula& formula, const SpatioTemporalSignal& signal,
                              const DynamicSpatialModel* model, DomainKind domain,
                              const EngineOptions& options) {
  if (model && model->location_count() != signal.location_count()) {
    throw MonitorError("spatial model has " + std::to_string(model->location_count()) +
                       " locations but the signal has " + std::to_string(signal.location_count()));
  }
  Evaluator evaluator(signal, model, options);
  evaluator.prepare(formula);
  return visit_domain(domain, [&]<SignalDomain D>() {
    return MonitorResult(signal.grid(), evaluator.eval<D>(formula));
  });
}

MonitorResult monitor(const MonitorRequest& request, const EngineOptions& options) {
  if (!request.script) throw MonitorError("monitor request has no script");
  if (!request.signal) throw MonitorError("monitor request has no signal");
  const script::Script& s = request.script->script();
  if (!request.signal->schema().same_fields(s.signals)) {
    throw MonitorError("signal variables do not match the script's signal declaration");
  }
  if (request.model && s.edges) {
    const RecordSchema& edges = request.model->edge_schema();
    for (const FieldDecl& field : s.edges->fields()) {
      auto index = edges.index_of(field.name);
      if (!index || edges[*index].type != field.type) {
        throw MonitorError("spatial model lacks edge label '" + field.name + "' of type " +
                           std::string(to_string(field.type)));
      }
    }
  }
  const auto formula = script::instantiate_formula(*request.script, request.formula, request.args);
  if (script::contains_spatial(*formula) && !request.model) {
    throw MonitorError("formula '" + request.formula + "' needs a spatial model");
  }
  return monitor_formula(*formula, *request.signal, request.model.get(),
                         request.domain.value_or(s.domain), options);
}

}  // namespace moonlight
