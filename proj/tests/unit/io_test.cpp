#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <string>

#include "moonlight/generate.hpp"
#include "moonlight/io/result_file.hpp"
#include "moonlight/io/trace_file.hpp"

namespace moonlight::io {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "moonlight_io_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TraceErrorCode code_of(std::string_view json) {
  try {
    parse_trace(json);
  } catch (const TraceError& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << json;
  return TraceErrorCode::Unreadable;
}

constexpr std::string_view kSmall = R"({
  "times": [0, 1.5],
  "locations": ["a", "b"],
  "signals": {"schema": [{"name": "x", "type": "real"}, {"name": "n", "type": "int"}],
              "values": [[[0.5, 1], [1.5, 2]], [[-1, 3], [2, 3]]]},
  "edge_schema": [{"name": "hop", "type": "int"}],
  "frames": [{"t": 0, "undirected": true, "edges": [[0, 1, {"hop": 1}]]}]
})";

TEST(TraceFile, ParsesAndExpandsUndirectedEdges) {
  const Trace t = parse_trace(kSmall);
  EXPECT_EQ(t.location_names, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(t.signal->value(1, 0, 0), -1.0);
  EXPECT_EQ(t.signal->value(0, 1, 1), 2.0);
  ASSERT_TRUE(t.model);
  EXPECT_EQ(t.model->frame(0).graph->edges().size(), 2u);
}

TEST(TraceFile, RoundTripsGeneratedTraces) {
  gen::SensorNetworkOptions sensor;
  sensor.nodes = 25;
  sensor.steps = 4;
  sensor.mobile = true;
  gen::BenchmarkSpec automotive;
  automotive.length = 6400;
  for (const Trace& original :
       {gen::generate_sensor_network(sensor), gen::generate_automotive_trace(automotive)}) {
    const std::string text = trace_to_json(original);
    EXPECT_EQ(parse_trace(text), original);
    const auto path = scratch("trace.json");
    write_trace(original, path);
    EXPECT_EQ(load_trace(path), original);
    EXPECT_EQ(trace_to_json(load_trace(path)), text);
  }
}

TEST(TraceFile, LocationCountForm) {
  const Trace t = parse_trace(R"({"times": [0], "locations": 2,
    "signals": {"schema": [{"name": "x", "type": "real"}], "values": [[[1]], [[2]]]}})");
  EXPECT_EQ(t.location_names, default_location_names(2));
  EXPECT_FALSE(t.model);
}

TEST(TraceFile, ErrorCodes) {
  EXPECT_EQ(code_of("{"), TraceErrorCode::MalformedJson);
  EXPECT_EQ(code_of("[]"), TraceErrorCode::SchemaViolation);
  EXPECT_EQ(code_of(R"({"times": [0, 0], "locations": 1,
    "signals": {"schema": [{"name": "x", "type": "real"}], "values": [[[1], [2]]]}})"),
            TraceErrorCode::NonIncreasingTimes);
  EXPECT_EQ(code_of(R"({"times": [0, 1], "locations": 1,
    "signals": {"schema": [{"name": "x", "type": "real"}], "values": [[[1]]]}})"),
            TraceErrorCode::RaggedMatrix);
  EXPECT_EQ(code_of(R"({"times": [0], "locations": 1,
    "signals": {"schema": [{"name": "x", "type": "bool"}], "values": [[[1]]]}})"),
            TraceErrorCode::SchemaViolation);
  EXPECT_EQ(code_of(R"({"times": [0], "locations": 1,
    "signals": {"schema": [{"name": "n", "type": "int"}], "values": [[[1.5]]]}})"),
            TraceErrorCode::SchemaViolation);
  EXPECT_EQ(code_of(R"({"times": [0], "locations": 2,
    "signals": {"schema": [{"name": "x", "type": "real"}], "values": [[[1]], [[2]]]},
    "edge_schema": [], "frames": [{"t": 0, "edges": [[0, 5, {}]]}]})"),
            TraceErrorCode::InvalidGraph);
  EXPECT_EQ(code_of(R"({"times": [0], "locations": 2,
    "signals": {"schema": [{"name": "x", "type": "real"}], "values": [[[1]], [[2]]]},
    "edge_schema": [], "frames": [{"t": 0, "edges": [[0, 0, {}]]}]})"),
            TraceErrorCode::InvalidGraph);
  try {
    load_trace(scratch("does-not-exist.json"));
    FAIL();
  } catch (const TraceError& e) {
    EXPECT_EQ(e.code(), TraceErrorCode::Unreadable);
  }
}

TEST(ResultFile, CsvRoundTrip) {
  const MonitorResult q(TimeGrid({0, 0.25}), MonitorResult::QuantitativeVerdicts{{1.5, -kInf}, {kInf, 0.1}});
  const std::string csv = result_to_csv(q, {"a", "b"});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,a,b");
  EXPECT_EQ(parse_result_csv(csv), q);
  const MonitorResult b(TimeGrid({1, 2}), MonitorResult::BooleanVerdicts{{true, false}});
  EXPECT_NE(result_to_csv(b).find("true"), std::string::npos);
  EXPECT_EQ(parse_result_csv(result_to_csv(b)), b);
}

TEST(ResultFile, JsonRoundTripAndFiles) {
  const MonitorResult q(TimeGrid({0, 3}), MonitorResult::QuantitativeVerdicts{{0.1 + 0.2, kInf}});
  EXPECT_EQ(parse_result_json(result_to_json(q)), q);
  for (auto format : {ResultFormat::Csv, ResultFormat::Json}) {
    const auto path = scratch(format == ResultFormat::Csv ? "r.csv" : "r.json");
    write_result(q, path, format);
    EXPECT_EQ(load_result(path), q);
  }
  EXPECT_EQ(format_from_path("x.csv"), ResultFormat::Csv);
  EXPECT_EQ(format_from_path("x.json"), ResultFormat::Json);
  EXPECT_FALSE(format_from_path("x.txt").has_value());
  EXPECT_THROW(parse_result_csv("t,a\n0,maybe\n"), ResultError);
}

}  // namespace
}  // namespace moonlight::io
