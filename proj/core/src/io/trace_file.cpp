#include "moonlight/io/trace_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace moonlight::io {
namespace {

using nlohmann::json;

[[noreturn]] void fail(TraceErrorCode code, const std::string& message) {
  throw TraceError(code, message);
}

const json& member(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) fail(TraceErrorCode::SchemaViolation, where + ": missing '" + key + "'");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(TraceErrorCode::SchemaViolation, where + ": expected a number");
  return j.get<double>();
}

RecordSchema parse_schema(const json& j, const std::string& where) {
  if (!j.is_array()) fail(TraceErrorCode::SchemaViolation, where + ": expected an array");
  std::vector<FieldDecl> fields;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& f = j[i];
    if (!f.is_object()) fail(TraceErrorCode::SchemaViolation, at + ": expected an object");
    const json& name = member(f, "name", at);
    const json& type = member(f, "type", at);
    if (!name.is_string() || !type.is_string()) {
      fail(TraceErrorCode::SchemaViolation, at + ": name and type must be strings");
    }
    const auto type_text = type.get<std::string>();
    if (type_text != "int" && type_text != "real") {
      fail(TraceErrorCode::SchemaViolation, at + ": unknown type '" + type_text + "'");
    }
    fields.push_back({name.get<std::string>(), type_text == "int" ? ValueType::Int : ValueType::Real});
  }
  try {
    return RecordSchema(std::move(fields));
  } catch (const ModelError& e) {
    fail(TraceErrorCode::SchemaViolation, where + ": " + e.what());
  }
}

json schema_to_json(const RecordSchema& schema) {
  json out = json::array();
  for (const FieldDecl& f : schema.fields()) {
    out.push_back({{"name", f.name}, {"type", std::string(to_string(f.type))}});
  }
  return out;
}

std::vector<double> parse_times(const json& j) {
  if (!j.is_array() || j.empty()) {
    fail(TraceErrorCode::SchemaViolation, "times: expected a non-empty array");
  }
  std::vector<double> times;
  times.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const double t = number(j[i], "times[" + std::to_string(i) + "]");
    if (!std::isfinite(t) || t < 0) {
      fail(TraceErrorCode::SchemaViolation,
           "times[" + std::to_string(i) + "]: time must be finite and non-negative");
    }
    if (!times.empty() && !(times.back() < t)) {
      fail(TraceErrorCode::NonIncreasingTimes,
           "times[" + std::to_string(i) + "]: times must be strictly increasing");
    }
    times.push_back(t);
  }
  return times;
}

std::vector<std::string> parse_locations(const json& j) {
  if (j.is_number_unsigned() && j.get<std::size_t>() > 0) {
    return default_location_names(j.get<std::size_t>());
  }
  if (!j.is_array() || j.empty()) {
    fail(TraceErrorCode::SchemaViolation,
         "locations: expected a positive count or a non-empty array of names");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      fail(TraceErrorCode::SchemaViolation, "locations[" + std::to_string(i) + "]: expected a string");
    }
    names.push_back(j[i].get<std::string>());
  }
  return names;
}

std::shared_ptr<const SpatioTemporalSignal> parse_signal(const json& j,
                                                         const std::vector<double>& times,
                                                         const std::vector<std::string>& names) {
  if (!j.is_object()) fail(TraceErrorCode::SchemaViolation, "signals: expected an object");
  RecordSchema schema = parse_schema(member(j, "schema", "signals"), "signals.schema");
  const json& values = member(j, "values", "signals");
  const std::size_t L = names.size(), T = times.size(), F = schema.size();
  if (!values.is_array() || values.size() != L) {
    fail(TraceErrorCode::RaggedMatrix, "signals.values: expected " + std::to_string(L) +
                                           " location rows");
  }
  std::vector<double> flat;
  flat.reserve(L * T * F);
  for (std::size_t l = 0; l < L; ++l) {
    const json& rows = values[l];
    if (!rows.is_array() || rows.size() != T) {
      fail(TraceErrorCode::RaggedMatrix, "signals.values[" + std::to_string(l) + "] (location '" +
                                             names[l] + "'): expected " + std::to_string(T) +
                                             " time rows");
    }
    for (std::size_t t = 0; t < T; ++t) {
      const json& row = rows[t];
      if (!row.is_array() || row.size() != F) {
        fail(TraceErrorCode::RaggedMatrix,
             "signals.values[" + std::to_string(l) + "][" + std::to_string(t) + "] (location '" +
                 names[l] + "'): expected " + std::to_string(F) + " fields");
      }
      for (std::size_t f = 0; f < F; ++f) {
        const std::string at = "field '" + schema[f].name + "' at location '" + names[l] +
                               "', time index " + std::to_string(t);
        const double v = number(row[f], at);
        try {
          check_field_value(schema[f], v);
        } catch (const ModelError& e) {
          fail(TraceErrorCode::SchemaViolation, at + ": " + e.what());
        }
        flat.push_back(v);
      }
    }
  }
  return std::make_shared<const SpatioTemporalSignal>(std::move(schema), TimeGrid(times), L,
                                                      std::move(flat));
}

std::size_t location_ref(const json& j, std::size_t L, const std::string& at) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() >= L) {
    fail(TraceErrorCode::InvalidGraph, at + ": expected a location index below " + std::to_string(L));
  }
  return j.get<std::size_t>();
}

std::shared_ptr<const DynamicSpatialModel> parse_frames(const json& root, std::size_t L) {
  auto frames_it = root.find("frames");
  if (frames_it == root.end() || frames_it->is_null()) return nullptr;
  const json& frames = *frames_it;
  if (!frames.is_array() || frames.empty()) {
    fail(TraceErrorCode::SchemaViolation, "frames: expected a non-empty array");
  }
  const RecordSchema edge_schema = parse_schema(member(root, "edge_schema", "trace"), "edge_schema");

  std::vector<DynamicSpatialModel::Frame> out;
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const std::string at = "frames[" + std::to_string(k) + "]";
    const json& frame = frames[k];
    if (!frame.is_object()) fail(TraceErrorCode::SchemaViolation, at + ": expected an object");
    const double t = number(member(frame, "t", at), at + ".t");
    if (!out.empty() && !(out.back().time < t)) {
      fail(TraceErrorCode::NonIncreasingTimes, at + ": frame times must be strictly increasing");
    }
    bool undirected = false;
    if (auto u = frame.find("undirected"); u != frame.end()) {
      if (!u->is_boolean()) fail(TraceErrorCode::SchemaViolation, at + ".undirected: expected a boolean");
      undirected = u->get<bool>();
    }
    const json& edges = member(frame, "edges", at);
    if (!edges.is_array()) fail(TraceErrorCode::SchemaViolation, at + ".edges: expected an array");
    std::vector<Edge> list;
    list.reserve(edges.size() * (undirected ? 2 : 1));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string eat = at + ".edges[" + std::to_string(i) + "]";
      const json& e = edges[i];
      if (!e.is_array() || e.size() != 3 || !e[2].is_object()) {
        fail(TraceErrorCode::SchemaViolation, eat + ": expected [source, target, {labels}]");
      }
      Edge edge{location_ref(e[0], L, eat), location_ref(e[1], L, eat), {}};
      for (const FieldDecl& f : edge_schema.fields()) {
        const std::string lat = "edge label '" + f.name + "' at " + eat;
        auto v = e[2].find(f.name);
        if (v == e[2].end()) fail(TraceErrorCode::SchemaViolation, lat + ": missing");
        const double value = number(*v, lat);
        try {
          check_field_value(f, value);
        } catch (const ModelError& err) {
          fail(TraceErrorCode::SchemaViolation, lat + ": " + err.what());
        }
        edge.labels.push_back(value);
      }
      if (e[2].size() != edge_schema.size()) {
        fail(TraceErrorCode::SchemaViolation, eat + ": unexpected edge label");
      }
      if (undirected) list.push_back({edge.target, edge.source, edge.labels});
      list.push_back(std::move(edge));
    }
    try {
      out.push_back({t, std::make_shared<const SpatialModel>(L, edge_schema, std::move(list))});
    } catch (const ModelError& e) {
      fail(TraceErrorCode::InvalidGraph, at + ": " + e.what());
    }
  }
  return std::make_shared<const DynamicSpatialModel>(std::move(out));
}

}  // namespace

std::string_view to_string(TraceErrorCode code) noexcept {
  switch (code) {
    case TraceErrorCode::Unreadable: return "unreadable";
    case TraceErrorCode::MalformedJson: return "malformed-json";
    case TraceErrorCode::SchemaViolation: return "schema-violation";
    case TraceErrorCode::NonIncreasingTimes: return "non-increasing-times";
    case TraceErrorCode::RaggedMatrix: return "ragged-matrix";
    case TraceErrorCode::InvalidGraph: return "invalid-graph";
  }
  return "unknown";
}

TraceError::TraceError(TraceErrorCode code, const std::string& message)
    : Error(std::string(to_string(code)) + ": " + message), code_(code) {}

bool operator==(const Trace& a, const Trace& b) {
  auto same = [](const auto& x, const auto& y) { return x == y || (x && y && *x == *y); };
  return a.location_names == b.location_names && same(a.signal, b.signal) && same(a.model, b.model);
}

std::vector<std::string> default_location_names(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back("loc" + std::to_string(i));
  return names;
}

Trace parse_trace(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(TraceErrorCode::MalformedJson, e.what());
  }
  if (!root.is_object()) fail(TraceErrorCode::SchemaViolation, "trace: expected an object");
  Trace trace;
  const auto times = parse_times(member(root, "times", "trace"));
  trace.location_names = parse_locations(member(root, "locations", "trace"));
  trace.signal = parse_signal(member(root, "signals", "trace"), times, trace.location_names);
  trace.model = parse_frames(root, trace.location_names.size());
  return trace;
}

Trace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(TraceErrorCode::Unreadable, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_trace(buffer.str());
}

std::string trace_to_json(const Trace& trace) {
  if (!trace.signal) throw TraceError(TraceErrorCode::SchemaViolation, "trace has no signal");
  const SpatioTemporalSignal& s = *trace.signal;
  json root;
  root["times"] = s.grid().points();
  root["locations"] = trace.location_names.empty() ? default_location_names(s.location_count())
                                                   : trace.location_names;
  json values = json::array();
  for (std::size_t l = 0; l < s.location_count(); ++l) {
    json rows = json::array();
    for (std::size_t t = 0; t < s.grid().size(); ++t) {
      json row = json::array();
      for (std::size_t f = 0; f < s.schema().size(); ++f) {
        const double v = s.value(l, t, f);
        if (s.schema()[f].type == ValueType::Int) {
          row.push_back(static_cast<std::int64_t>(v));
        } else {
          row.push_back(v);
        }
      }
      rows.push_back(std::move(row));
    }
    values.push_back(std::move(rows));
  }
  root["signals"] = {{"schema", schema_to_json(s.schema())}, {"values", std::move(values)}};
  if (trace.model) {
    const DynamicSpatialModel& m = *trace.model;
    root["edge_schema"] = schema_to_json(m.edge_schema());
    json frames = json::array();
    for (std::size_t k = 0; k < m.frame_count(); ++k) {
      const auto& frame = m.frame(k);
      json edges = json::array();
      for (const Edge& e : frame.graph->edges()) {
        json labels = json::object();
        for (std::size_t f = 0; f < m.edge_schema().size(); ++f) {
          const FieldDecl& decl = m.edge_schema()[f];
          if (decl.type == ValueType::Int) {
            labels[decl.name] = static_cast<std::int64_t>(e.labels[f]);
          } else {
            labels[decl.name] = e.labels[f];
          }
        }
        edges.push_back(json::array({e.source, e.target, std::move(labels)}));
      }
      frames.push_back({{"t", frame.time}, {"edges", std::move(edges)}});
    }
    root["frames"] = std::move(frames);
  }
  return root.dump();
}

void write_trace(const Trace& trace, const std::filesystem::path& path) {
  const std::string text = trace_to_json(trace);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(TraceErrorCode::Unreadable, "cannot write " + path.string());
  out << text << '\n';
  if (!out) fail(TraceErrorCode::Unreadable, "cannot write " + path.string());
}

}  // namespace moonlight::io
