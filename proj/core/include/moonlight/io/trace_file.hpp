#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "moonlight/error.hpp"
#include "moonlight/signal.hpp"
#include "moonlight/spatial_model.hpp"

namespace moonlight::io {

enum class TraceErrorCode {
  Unreadable,
  MalformedJson,
  SchemaViolation,
  NonIncreasingTimes,
  RaggedMatrix,
  InvalidGraph,
};

std::string_view to_string(TraceErrorCode code) noexcept;

class TraceError : public Error {
 public:
  TraceError(TraceErrorCode code, const std::string& message);
  TraceErrorCode code() const noexcept { return code_; }

 private:
  TraceErrorCode code_;
};

/// In-memory trace file: a signal plus an optional dynamic spatial model.
struct Trace {
  std::vector<std::string> location_names;
  std::shared_ptr<const SpatioTemporalSignal> signal;
  std::shared_ptr<const DynamicSpatialModel> model;  ///< null for temporal traces

  friend bool operator==(const Trace& a, const Trace& b);
};

/// Document layout:
///   {"times": [...],
///    "locations": ["name", ...] | count,
///    "signals": {"schema": [{"name", "type": "int"|"real"}...],
///                "values": [location][time][field]},
///    "edge_schema": [{"name", "type"}...],            (required with frames)
///    "frames": [{"t", "undirected": bool?,
///                "edges": [[src, dst, {"label": value...}]...]}...]}
/// Undirected frames are expanded into two directed edges per entry.
Trace parse_trace(std::string_view json_text);
Trace load_trace(const std::filesystem::path& path);

std::string trace_to_json(const Trace& trace);
/// Throws TraceError(Unreadable) when the file cannot be written.
void write_trace(const Trace& trace, const std::filesystem::path& path);

/// "loc0", "loc1", ...
std::vector<std::string> default_location_names(std::size_t count);

}  // namespace moonlight::io
