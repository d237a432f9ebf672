#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "moonlight/distance.hpp"
#include "moonlight/domain.hpp"
#include "moonlight/interval.hpp"
#include "moonlight/script/ast.hpp"
#include "moonlight/spatial_model.hpp"

namespace moonlight::spatial {

/// Edge length rule: a named edge label, or a constant (1.0 when omitted).
struct DistanceExpr {
  std::optional<std::string> label;
  double literal = 1.0;

  static DistanceExpr hop_of(std::string label) { return {std::move(label), 1.0}; }
  static DistanceExpr constant(double value) { return {std::nullopt, value}; }
  static DistanceExpr from_spec(const std::optional<script::DistanceSpec>& spec);

  /// Stable textual key, e.g. "label:hop" or "const:1".
  std::string key() const;

  friend bool operator==(const DistanceExpr&, const DistanceExpr&) = default;
};

enum class DistanceKind { Hop, Real };

/// Int labels measure in HopDistance; real labels and constants in RealDistance.
/// Throws ModelError for labels missing from `edge_schema`.
DistanceKind distance_kind(const DistanceExpr& dexpr, const RecordSchema& edge_schema);

/// Length of one edge. Throws ModelError for negative or unknown lengths.
double edge_length(const Edge& edge, const RecordSchema& edge_schema, const DistanceExpr& dexpr);

/// Lengths of all edges of `g`, in edges() order.
template <DistanceDomain Dist>
std::vector<typename Dist::value_type> edge_lengths(const SpatialModel& g,
                                                    const DistanceExpr& dexpr);

/// Dense L x L matrix of shortest accumulated lengths.
template <DistanceDomain Dist>
class DistanceMatrix {
 public:
  using value_type = typename Dist::value_type;

  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, Dist::infinity()) {
    for (std::size_t i = 0; i < n; ++i) d_[i * n + i] = Dist::zero();
  }

  std::size_t size() const noexcept { return n_; }
  value_type at(std::size_t from, std::size_t to) const noexcept { return d_[from * n_ + to]; }
  value_type& at(std::size_t from, std::size_t to) noexcept { return d_[from * n_ + to]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<value_type> d_;
};

/// All-pairs shortest paths (Dijkstra from every source) over precomputed
/// non-negative edge lengths.
template <DistanceDomain Dist>
DistanceMatrix<Dist> shortest_distance_matrix(const SpatialModel& g,
                                              const std::vector<typename Dist::value_type>& lengths);

template <DistanceDomain Dist>
DistanceMatrix<Dist> shortest_distance_matrix(const SpatialModel& g, const DistanceExpr& dexpr) {
  return shortest_distance_matrix<Dist>(g, edge_lengths<Dist>(g, dexpr));
}

struct ReachStats {
  std::size_t rounds = 0;   ///< relaxation waves
  std::size_t entries = 0;  ///< (location, distance) states created by bounded reach
};

/// s1 reach_w s2 over `g`. `lengths` follows g.edges() order.
template <SignalDomain D, DistanceDomain Dist>
Values<D> monitor_reach(const SpatialModel& g, const std::vector<typename Dist::value_type>& lengths,
                        const Values<D>& s1, const Values<D>& s2, const Interval& w,
                        ReachStats* stats = nullptr);

/// escape_w s: the start-to-endpoint distance is read from `matrix`.
template <SignalDomain D, DistanceDomain Dist>
Values<D> monitor_escape(const SpatialModel& g, const DistanceMatrix<Dist>& matrix,
                         const Values<D>& s, const Interval& w);

template <SignalDomain D, DistanceDomain Dist>
Values<D> somewhere(const SpatialModel& g, const std::vector<typename Dist::value_type>& lengths,
                    const Values<D>& s, const Interval& w, ReachStats* stats = nullptr) {
  return monitor_reach<D, Dist>(g, lengths, Values<D>(s.size(), D::top()), s, w, stats);
}

template <SignalDomain D, DistanceDomain Dist>
Values<D> everywhere(const SpatialModel& g, const std::vector<typename Dist::value_type>& lengths,
                     const Values<D>& s, const Interval& w, ReachStats* stats = nullptr) {
  Values<D> negated(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) negated[i] = D::negation(s[i]);
  Values<D> out = somewhere<D, Dist>(g, lengths, negated, w, stats);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = D::negation(out[i]);
  return out;
}

// Conveniences that derive lengths from a distance expression and pick the
// distance domain from the label type.

template <SignalDomain D>
Values<D> monitor_reach(const SpatialModel& g, const Values<D>& s1, const Values<D>& s2,
                        const DistanceExpr& dexpr, const Interval& w, ReachStats* stats = nullptr) {
  if (distance_kind(dexpr, g.edge_schema()) == DistanceKind::Hop) {
    return monitor_reach<D, HopDistance>(g, edge_lengths<HopDistance>(g, dexpr), s1, s2, w, stats);
  }
  return monitor_reach<D, RealDistance>(g, edge_lengths<RealDistance>(g, dexpr), s1, s2, w, stats);
}

template <SignalDomain D>
Values<D> monitor_escape(const SpatialModel& g, const Values<D>& s, const DistanceExpr& dexpr,
                         const Interval& w) {
  if (distance_kind(dexpr, g.edge_schema()) == DistanceKind::Hop) {
    return monitor_escape<D, HopDistance>(g, shortest_distance_matrix<HopDistance>(g, dexpr), s, w);
  }
  return monitor_escape<D, RealDistance>(g, shortest_distance_matrix<RealDistance>(g, dexpr), s, w);
}

enum class DerivedKind { Somewhere, Everywhere };

template <SignalDomain D>
Values<D> monitor_spatial_derived(DerivedKind kind, const SpatialModel& g, const Values<D>& s,
                                  const DistanceExpr& dexpr, const Interval& w) {
  if (kind == DerivedKind::Somewhere) {
    return monitor_reach<D>(g, Values<D>(s.size(), D::top()), s, dexpr, w);
  }
  Values<D> negated(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) negated[i] = D::negation(s[i]);
  Values<D> out = monitor_reach<D>(g, Values<D>(s.size(), D::top()), negated, dexpr, w);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = D::negation(out[i]);
  return out;
}

}  // namespace moonlight::spatial
