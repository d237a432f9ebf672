#include "moonlight/io/result_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "../number_format.hpp"
#include "moonlight/io/trace_file.hpp"

namespace moonlight::io {
namespace {

using nlohmann::json;

std::vector<std::string> names_for(const MonitorResult& r, const std::vector<std::string>& names) {
  if (names.empty()) return default_location_names(r.location_count());
  if (names.size() != r.location_count()) {
    throw ResultError("expected " + std::to_string(r.location_count()) + " location names");
  }
  return names;
}

double parse_double(std::string_view text, const std::string& where) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ResultError(where + ": not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

json number_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return parse_double(j.get<std::string>(), where);
  if (!j.is_number()) throw ResultError(where + ": expected a number");
  return j.get<double>();
}

}  // namespace

std::optional<ResultFormat> format_from_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".json") return ResultFormat::Json;
  if (ext == ".csv") return ResultFormat::Csv;
  return std::nullopt;
}

std::string result_to_csv(const MonitorResult& result, const std::vector<std::string>& names) {
  const auto header = names_for(result, names);
  std::string out = "t";
  for (const auto& name : header) out += "," + name;
  out += '\n';
  const bool boolean = result.domain() == DomainKind::Boolean;
  for (std::size_t t = 0; t < result.grid().size(); ++t) {
    out += format_number(result.grid()[t]);
    for (std::size_t l = 0; l < result.location_count(); ++l) {
      out += ',';
      out += boolean ? (result.boolean()[l][t] ? "true" : "false")
                     : format_number(result.quantitative()[l][t]);
    }
    out += '\n';
  }
  return out;
}

std::string result_to_json(const MonitorResult& result, const std::vector<std::string>& names) {
  json root;
  root["domain"] = std::string(to_string(result.domain()));
  root["times"] = result.grid().points();
  root["locations"] = names_for(result, names);
  json values = json::array();
  for (std::size_t l = 0; l < result.location_count(); ++l) {
    json row = json::array();
    for (std::size_t t = 0; t < result.grid().size(); ++t) {
      if (result.domain() == DomainKind::Boolean) {
        row.push_back(static_cast<bool>(result.boolean()[l][t]));
      } else {
        row.push_back(number_to_json(result.quantitative()[l][t]));
      }
    }
    values.push_back(std::move(row));
  }
  root["values"] = std::move(values);
  return root.dump();
}

MonitorResult parse_result_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() < 2) throw ResultError("csv: expected a header and at least one row");
  const auto header = split(lines[0], ',');
  if (header.size() < 2 || header[0] != "t") throw ResultError("csv: header must start with 't'");
  const std::size_t L = header.size() - 1;
  const std::size_t T = lines.size() - 1;

  std::vector<double> times;
  std::vector<std::vector<std::string_view>> cells;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    auto row = split(lines[r], ',');
    if (row.size() != L + 1) throw ResultError("csv: row " + std::to_string(r) + " is ragged");
    times.push_back(parse_double(row[0], "csv row " + std::to_string(r)));
    cells.push_back(std::move(row));
  }
  const bool boolean = cells[0][1] == "true" || cells[0][1] == "false";
  if (boolean) {
    MonitorResult::BooleanVerdicts v(L, std::vector<bool>(T));
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t l = 0; l < L; ++l) {
        const auto cell = cells[t][l + 1];
        if (cell != "true" && cell != "false") {
          throw ResultError("csv: row " + std::to_string(t + 1) + " mixes domains");
        }
        v[l][t] = cell == "true";
      }
    }
    return MonitorResult(TimeGrid(std::move(times)), std::move(v));
  }
  MonitorResult::QuantitativeVerdicts v(L, std::vector<double>(T));
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t l = 0; l < L; ++l) {
      v[l][t] = parse_double(cells[t][l + 1], "csv row " + std::to_string(t + 1));
    }
  }
  return MonitorResult(TimeGrid(std::move(times)), std::move(v));
}

MonitorResult parse_result_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ResultError(std::string("json: ") + e.what());
  }
  try {
    DomainKind domain;
    if (!parse_domain(root.at("domain").get<std::string>(), domain)) {
      throw ResultError("json: unknown domain");
    }
    std::vector<double> times;
    for (const auto& t : root.at("times")) times.push_back(number_from_json(t, "times"));
    const json& values = root.at("values");
    const std::size_t T = times.size();
    if (domain == DomainKind::Boolean) {
      MonitorResult::BooleanVerdicts v;
      for (const auto& row : values) {
        std::vector<bool> r;
        for (const auto& x : row) r.push_back(x.get<bool>());
        v.push_back(std::move(r));
      }
      return MonitorResult(TimeGrid(std::move(times)), std::move(v));
    }
    MonitorResult::QuantitativeVerdicts v;
    for (const auto& row : values) {
      std::vector<double> r;
      r.reserve(T);
      for (const auto& x : row) r.push_back(number_from_json(x, "values"));
      v.push_back(std::move(r));
    }
    return MonitorResult(TimeGrid(std::move(times)), std::move(v));
  } catch (const json::exception& e) {
    throw ResultError(std::string("json: ") + e.what());
  }
}

void write_result(const MonitorResult& result, const std::filesystem::path& path,
                  ResultFormat format, const std::vector<std::string>& names) {
  const std::string text =
      format == ResultFormat::Csv ? result_to_csv(result, names) : result_to_json(result, names) + "\n";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResultError("cannot write " + path.string());
  out << text;
  if (!out) throw ResultError("cannot write " + path.string());
}

MonitorResult load_result(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResultError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto format = format_from_path(path);
  if (format == ResultFormat::Csv) return parse_result_csv(text);
  if (format == ResultFormat::Json) return parse_result_json(text);
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{' ? parse_result_json(text)
                                                          : parse_result_csv(text);
}

}  // namespace moonlight::io
