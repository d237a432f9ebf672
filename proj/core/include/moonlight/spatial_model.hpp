#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "moonlight/record.hpp"

namespace moonlight {

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<double> labels;  ///< one value per field of the edge schema

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed, edge-labelled graph over locations 0..L-1.
///
/// No self-loops and at most one edge per ordered pair.
class SpatialModel {
 public:
  SpatialModel(std::size_t locations, RecordSchema edge_schema, std::vector<Edge> edges);

  std::size_t location_count() const noexcept { return locations_; }
  const RecordSchema& edge_schema() const noexcept { return schema_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Indices into edges() of the edges leaving / entering `location`.
  std::span<const std::size_t> outgoing(std::size_t location) const noexcept {
    return {out_index_.data() + out_offset_[location],
            out_offset_[location + 1] - out_offset_[location]};
  }
  std::span<const std::size_t> incoming(std::size_t location) const noexcept {
    return {in_index_.data() + in_offset_[location],
            in_offset_[location + 1] - in_offset_[location]};
  }

  friend bool operator==(const SpatialModel& a, const SpatialModel& b) {
    return a.locations_ == b.locations_ && a.schema_ == b.schema_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t locations_;
  RecordSchema schema_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offset_, out_index_;
  std::vector<std::size_t> in_offset_, in_index_;
};

/// Piecewise-constant sequence of graphs over one location set.
class DynamicSpatialModel {
 public:
  struct Frame {
    double time = 0.0;
    std::shared_ptr<const SpatialModel> graph;
  };

  explicit DynamicSpatialModel(std::vector<Frame> frames);
  /// A single frame at time 0, valid for every query t >= 0.
  static DynamicSpatialModel constant(SpatialModel graph);

  std::size_t frame_count() const noexcept { return frames_.size(); }
  const Frame& frame(std::size_t i) const noexcept { return frames_[i]; }
  std::size_t location_count() const noexcept { return frames_.front().graph->location_count(); }
  const RecordSchema& edge_schema() const noexcept { return frames_.front().graph->edge_schema(); }

  /// Index of the frame with the largest timestamp <= t. Throws QueryError
  /// when t precedes the first frame.
  std::size_t frame_index_at(double t) const;
  const SpatialModel& graph_at(double t) const { return *frames_[frame_index_at(t)].graph; }

  friend bool operator==(const DynamicSpatialModel& a, const DynamicSpatialModel& b);

 private:
  std::vector<Frame> frames_;
};

}  // namespace moonlight
