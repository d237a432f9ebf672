#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moonlight/error.hpp"
#include "moonlight/result.hpp"

namespace moonlight::io {

class ResultError : public Error {
 public:
  using Error::Error;
};

enum class ResultFormat { Json, Csv };

/// From the file extension (".json" or ".csv").
std::optional<ResultFormat> format_from_path(const std::filesystem::path& path);

/// One row per time point: "t,<loc>,...". Booleans print as true/false,
/// numbers in shortest round-trip form, infinities as inf/-inf.
std::string result_to_csv(const MonitorResult& result,
                          const std::vector<std::string>& location_names = {});
/// {"domain", "times", "locations", "values": [location][time]}; infinities
/// are written as the strings "inf" and "-inf".
std::string result_to_json(const MonitorResult& result,
                           const std::vector<std::string>& location_names = {});

MonitorResult parse_result_csv(std::string_view text);
MonitorResult parse_result_json(std::string_view text);

void write_result(const MonitorResult& result, const std::filesystem::path& path,
                  ResultFormat format, const std::vector<std::string>& location_names = {});
MonitorResult load_result(const std::filesystem::path& path);

}  // namespace moonlight::io
