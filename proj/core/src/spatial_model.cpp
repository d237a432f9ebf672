#include "moonlight/spatial_model.hpp"

#include <algorithm>
#include <unordered_set>

#include "moonlight/error.hpp"

namespace moonlight {
namespace {

void build_index(std::size_t locations, const std::vector<Edge>& edges, bool by_source,
                 std::vector<std::size_t>& offset, std::vector<std::size_t>& index) {
  offset.assign(locations + 1, 0);
  for (const Edge& e : edges) ++offset[(by_source ? e.source : e.target) + 1];
  for (std::size_t l = 0; l < locations; ++l) offset[l + 1] += offset[l];
  index.resize(edges.size());
  std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    index[fill[by_source ? edges[i].source : edges[i].target]++] = i;
  }
}

}  // namespace

SpatialModel::SpatialModel(std::size_t locations, RecordSchema edge_schema, std::vector<Edge> edges)
    : locations_(locations), schema_(std::move(edge_schema)), edges_(std::move(edges)) {
  if (locations_ == 0) throw ModelError("spatial model needs at least one location");
  std::unordered_set<std::size_t> seen;
  seen.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.source >= locations_ || e.target >= locations_) {
      throw ModelError("edge (" + std::to_string(e.source) + ", " + std::to_string(e.target) +
                       ") references a missing location");
    }
    if (e.source == e.target) {
      throw ModelError("self-loop at location " + std::to_string(e.source));
    }
    if (!seen.insert(e.source * locations_ + e.target).second) {
      throw ModelError("duplicate edge (" + std::to_string(e.source) + ", " +
                       std::to_string(e.target) + ")");
    }
    if (e.labels.size() != schema_.size()) {
      throw ModelError("edge (" + std::to_string(e.source) + ", " + std::to_string(e.target) +
                       ") has " + std::to_string(e.labels.size()) + " labels, expected " +
                       std::to_string(schema_.size()));
    }
    for (std::size_t f = 0; f < schema_.size(); ++f) check_field_value(schema_[f], e.labels[f]);
  }
  build_index(locations_, edges_, true, out_offset_, out_index_);
  build_index(locations_, edges_, false, in_offset_, in_index_);
}

DynamicSpatialModel::DynamicSpatialModel(std::vector<Frame> frames) : frames_(std::move(frames)) {
  if (frames_.empty()) throw ModelError("dynamic spatial model needs at least one frame");
  for (std::size_t i = 0; i < frames_.size(); ++i) {
    const Frame& f = frames_[i];
    if (!f.graph) throw ModelError("frame " + std::to_string(i) + " has no graph");
    if (i == 0) continue;
    if (!(frames_[i - 1].time < f.time)) {
      throw ModelError("frame timestamps must be strictly increasing (frame " +
                       std::to_string(i) + ")");
    }
    if (f.graph->location_count() != frames_[0].graph->location_count()) {
      throw ModelError("frame " + std::to_string(i) + " changes the location set");
    }
    if (!(f.graph->edge_schema() == frames_[0].graph->edge_schema())) {
      throw ModelError("frame " + std::to_string(i) + " changes the edge schema");
    }
  }
}

DynamicSpatialModel DynamicSpatialModel::constant(SpatialModel graph) {
  return DynamicSpatialModel({Frame{0.0, std::make_shared<const SpatialModel>(std::move(graph))}});
}

std::size_t DynamicSpatialModel::frame_index_at(double t) const {
  if (t < frames_.front().time) {
    throw QueryError("time " + std::to_string(t) + " precedes the first frame");
  }
  auto it = std::upper_bound(frames_.begin(), frames_.end(), t,
                             [](double value, const Frame& f) { return value < f.time; });
  return static_cast<std::size_t>(it - frames_.begin()) - 1;
}

bool operator==(const DynamicSpatialModel& a, const DynamicSpatialModel& b) {
  return std::equal(a.frames_.begin(), a.frames_.end(), b.frames_.begin(), b.frames_.end(),
                    [](const DynamicSpatialModel::Frame& x, const DynamicSpatialModel::Frame& y) {
                      return x.time == y.time && *x.graph == *y.graph;
                    });
}

}  // namespace moonlight
