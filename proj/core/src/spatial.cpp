#include "moonlight/spatial.hpp"

#include <cmath>
#include <functional>
#include <queue>
#include <unordered_map>

#include "moonlight/error.hpp"
#include "number_format.hpp"

namespace moonlight::spatial {

DistanceExpr DistanceExpr::from_spec(const std::optional<script::DistanceSpec>& spec) {
  if (!spec) return constant(1.0);
  if (spec->kind == script::DistanceSpec::Kind::Label) return hop_of(spec->label);
  return constant(spec->literal);
}

std::string DistanceExpr::key() const {
  if (label) return "label:" + *label;
  return "const:" + format_number(literal);
}

DistanceKind distance_kind(const DistanceExpr& dexpr, const RecordSchema& edge_schema) {
  if (!dexpr.label) return DistanceKind::Real;
  auto index = edge_schema.index_of(*dexpr.label);
  if (!index) throw ModelError("unknown edge label '" + *dexpr.label + "'");
  return edge_schema[*index].type == ValueType::Int ? DistanceKind::Hop : DistanceKind::Real;
}

double edge_length(const Edge& edge, const RecordSchema& edge_schema, const DistanceExpr& dexpr) {
  double value = dexpr.literal;
  if (dexpr.label) {
    auto index = edge_schema.index_of(*dexpr.label);
    if (!index) throw ModelError("unknown edge label '" + *dexpr.label + "'");
    value = edge.labels[*index];
  }
  if (!(value >= 0.0) || std::isinf(value)) {
    throw ModelError("edge (" + std::to_string(edge.source) + ", " + std::to_string(edge.target) +
                     ") has invalid length " + format_number(value));
  }
  return value;
}

template <DistanceDomain Dist>
std::vector<typename Dist::value_type> edge_lengths(const SpatialModel& g,
                                                    const DistanceExpr& dexpr) {
  using Len = typename Dist::value_type;
  std::vector<Len> out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    out.push_back(static_cast<Len>(edge_length(e, g.edge_schema(), dexpr)));
  }
  return out;
}

template <DistanceDomain Dist>
DistanceMatrix<Dist> shortest_distance_matrix(
    const SpatialModel& g, const std::vector<typename Dist::value_type>& lengths) {
  using Len = typename Dist::value_type;
  const std::size_t n = g.location_count();
  if (lengths.size() != g.edges().size()) throw MonitorError("edge length count mismatch");
  DistanceMatrix<Dist> m(n);
  // One Dijkstra run per source: O(L * E * log L), at worst cubic-log on dense graphs.
  using Item = std::pair<Len, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  for (std::size_t source = 0; source < n; ++source) {
    Len* row = &m.at(source, 0);
    queue.push({Dist::zero(), source});
    while (!queue.empty()) {
      const auto [d, x] = queue.top();
      queue.pop();
      if (row[x] < d) continue;
      for (std::size_t e : g.outgoing(x)) {
        const std::size_t y = g.edges()[e].target;
        const Len nd = Dist::accumulate(d, lengths[e]);
        if (nd < row[y]) {
          row[y] = nd;
          queue.push({nd, y});
        }
      }
    }
  }
  return m;
}

namespace {

template <SignalDomain D>
void check_size(const SpatialModel& g, const Values<D>& s, const char* what) {
  if (s.size() != g.location_count()) {
    throw MonitorError(std::string(what) + " has " + std::to_string(s.size()) +
                       " values for " + std::to_string(g.location_count()) + " locations");
  }
}

// Join over all walks (any length) of meet(s2[end], s1 over the walk minus its end).
template <SignalDomain D>
Values<D> reach_unbounded(const SpatialModel& g, const Values<D>& s1, const Values<D>& s2,
                          ReachStats* stats) {
  const std::size_t n = g.location_count();
  Values<D> r = s2;
  std::vector<char> queued(n, 0);
  std::vector<std::size_t> active, next;
  for (std::size_t x = 0; x < n; ++x) {
    if (r[x] != D::bottom()) {
      active.push_back(x);
      queued[x] = 1;
    }
  }
  std::size_t rounds = 0;
  while (!active.empty()) {
    ++rounds;
    next.clear();
    for (std::size_t x : active) {
      queued[x] = 0;
      const auto rx = r[x];
      for (std::size_t e : g.incoming(x)) {
        const std::size_t p = g.edges()[e].source;
        const auto candidate = D::meet(s1[p], rx);
        if (D::less(r[p], candidate)) {
          r[p] = candidate;
          if (!queued[p]) {
            queued[p] = 1;
            next.push_back(p);
          }
        }
      }
    }
    active.swap(next);
  }
  // Each wave extends the best walks by one edge; improvements stop once
  // walks would revisit a location, so at most n waves run.
  if (rounds > n) throw EvaluationError("reach relaxation did not stabilise within L rounds");
  if (stats) stats->rounds = std::max(stats->rounds, rounds);
  return r;
}

template <DistanceDomain Dist>
struct StateKey {
  std::size_t location;
  typename Dist::value_type distance;
  bool operator==(const StateKey&) const = default;
};

template <DistanceDomain Dist>
struct StateKeyHash {
  std::size_t operator()(const StateKey<Dist>& k) const noexcept {
    const std::size_t h = std::hash<typename Dist::value_type>{}(k.distance);
    return h ^ (k.location * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

// Relaxation over (location, accumulated length) states, discarding states
// whose length exceeds hi. Each state holds the best value of walks from its
// location whose prefix has exactly that length.
template <SignalDomain D, DistanceDomain Dist>
Values<D> reach_bounded(const SpatialModel& g, const std::vector<typename Dist::value_type>& lengths,
                        const Values<D>& s1, const Values<D>& s2, const Interval& w,
                        ReachStats* stats) {
  using Len = typename Dist::value_type;
  using V = typename D::value_type;
  struct State {
    std::size_t location;
    Len distance;
    V value;
    bool queued;
  };
  const std::size_t n = g.location_count();
  std::vector<State> states;
  std::unordered_map<StateKey<Dist>, std::size_t, StateKeyHash<Dist>> index;
  std::vector<std::size_t> active, next;

  for (std::size_t x = 0; x < n; ++x) {
    if (s2[x] == D::bottom()) continue;
    index.emplace(StateKey<Dist>{x, Dist::zero()}, states.size());
    active.push_back(states.size());
    states.push_back({x, Dist::zero(), s2[x], true});
  }

  std::size_t rounds = 0;
  while (!active.empty()) {
    ++rounds;
    next.clear();
    for (std::size_t slot : active) {
      states[slot].queued = false;
      const std::size_t x = states[slot].location;
      const Len d = states[slot].distance;
      const V v = states[slot].value;
      for (std::size_t e : g.incoming(x)) {
        const std::size_t p = g.edges()[e].source;
        const Len nd = Dist::accumulate(lengths[e], d);
        if (Dist::to_double(nd) > w.hi()) continue;
        const V nv = D::meet(s1[p], v);
        if (nv == D::bottom()) continue;
        auto [it, inserted] = index.try_emplace(StateKey<Dist>{p, nd}, states.size());
        if (inserted) {
          states.push_back({p, nd, nv, true});
          next.push_back(it->second);
          continue;
        }
        State& st = states[it->second];
        if (!D::less(st.value, nv)) continue;
        st.value = nv;
        if (!st.queued) {
          st.queued = true;
          next.push_back(it->second);
        }
      }
    }
    active.swap(next);
  }

  Values<D> out(n, D::bottom());
  for (const State& st : states) {
    if (w.contains(Dist::to_double(st.distance))) out[st.location] = D::join(out[st.location], st.value);
  }
  if (stats) {
    stats->rounds = std::max(stats->rounds, rounds);
    stats->entries += states.size();
  }
  return out;
}

}  // namespace

template <SignalDomain D, DistanceDomain Dist>
Values<D> monitor_reach(const SpatialModel& g, const std::vector<typename Dist::value_type>& lengths,
                        const Values<D>& s1, const Values<D>& s2, const Interval& w,
                        ReachStats* stats) {
  check_size<D>(g, s1, "reach left operand");
  check_size<D>(g, s2, "reach right operand");
  if (lengths.size() != g.edges().size()) throw MonitorError("edge length count mismatch");
  if (w.bounded()) return reach_bounded<D, Dist>(g, lengths, s1, s2, w, stats);
  const Values<D> all = reach_unbounded<D>(g, s1, s2, stats);
  if (w.lo() == 0.0) return all;
  // A walk whose length reaches lo first does so at a prefix with length in
  // [lo, lo + longest edge]; any continuation from there is covered by `all`.
  double longest = 0.0;
  for (const auto& len : lengths) longest = std::max(longest, Dist::to_double(len));
  return reach_bounded<D, Dist>(g, lengths, s1, all, Interval(w.lo(), w.lo() + longest), stats);
}

template <SignalDomain D, DistanceDomain Dist>
Values<D> monitor_escape(const SpatialModel& g, const DistanceMatrix<Dist>& matrix,
                         const Values<D>& s, const Interval& w) {
  using V = typename D::value_type;
  check_size<D>(g, s, "escape operand");
  const std::size_t n = g.location_count();
  if (matrix.size() != n) throw MonitorError("distance matrix does not match the graph");

  struct Item {
    V value;
    std::size_t location;
  };
  auto worse = [](const Item& a, const Item& b) { return D::less(a.value, b.value); };

  Values<D> out(n, D::bottom());
  Values<D> best(n);
  std::priority_queue<Item, std::vector<Item>, decltype(worse)> queue(worse);
  for (std::size_t l = 0; l < n; ++l) {
    if (s[l] == D::bottom()) continue;
    // Widest path from l: best[x] is the largest meet of s along a walk l..x.
    std::fill(best.begin(), best.end(), D::bottom());
    best[l] = s[l];
    queue.push({s[l], l});
    while (!queue.empty()) {
      const Item item = queue.top();
      queue.pop();
      if (D::less(item.value, best[item.location])) continue;
      for (std::size_t e : g.outgoing(item.location)) {
        const std::size_t y = g.edges()[e].target;
        const V candidate = D::meet(item.value, s[y]);
        if (D::less(best[y], candidate)) {
          best[y] = candidate;
          queue.push({candidate, y});
        }
      }
    }
    V acc = D::bottom();
    for (std::size_t x = 0; x < n; ++x) {
      const auto d = matrix.at(l, x);
      if (d == Dist::infinity()) continue;
      if (w.contains(Dist::to_double(d))) acc = D::join(acc, best[x]);
    }
    out[l] = acc;
  }
  return out;
}

template std::vector<HopDistance::value_type> edge_lengths<HopDistance>(const SpatialModel&,
                                                                        const DistanceExpr&);
template std::vector<RealDistance::value_type> edge_lengths<RealDistance>(const SpatialModel&,
                                                                          const DistanceExpr&);
template DistanceMatrix<HopDistance> shortest_distance_matrix<HopDistance>(
    const SpatialModel&, const std::vector<HopDistance::value_type>&);
template DistanceMatrix<RealDistance> shortest_distance_matrix<RealDistance>(
    const SpatialModel&, const std::vector<RealDistance::value_type>&);

#define MOONLIGHT_INSTANTIATE(D, Dist)                                                          \
  template Values<D> monitor_reach<D, Dist>(const SpatialModel&,                                \
                                            const std::vector<Dist::value_type>&,               \
                                            const Values<D>&, const Values<D>&, const Interval&, \
                                            ReachStats*);                                       \
  template Values<D> monitor_escape<D, Dist>(const SpatialModel&, const DistanceMatrix<Dist>&,  \
                                             const Values<D>&, const Interval&);

MOONLIGHT_INSTANTIATE(BooleanDomain, HopDistance)
MOONLIGHT_INSTANTIATE(BooleanDomain, RealDistance)
MOONLIGHT_INSTANTIATE(MinMaxDomain, HopDistance)
MOONLIGHT_INSTANTIATE(MinMaxDomain, RealDistance)

#undef MOONLIGHT_INSTANTIATE

}  // namespace moonlight::spatial
