#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "moonlight/bench.hpp"
#include "moonlight/engine.hpp"
#include "moonlight/error.hpp"
#include "moonlight/generate.hpp"
#include "moonlight/io/result_file.hpp"
#include "moonlight/io/trace_file.hpp"
#include "moonlight/script/checker.hpp"
#include "moonlight/script/diagnostics.hpp"
#include "moonlight/script/printer.hpp"

namespace moonlight::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

script::FormulaArgs parse_params(const std::vector<std::string>& items) {
  script::FormulaArgs args;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects NAME=VALUE, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw UsageError("--param " + name + ": '" + text + "' is not a number");
    }
    if (!args.emplace(name, value).second) throw UsageError("--param " + name + " given twice");
  }
  return args;
}

DomainKind domain_option(const std::string& text) {
  DomainKind kind;
  if (!parse_domain(text, kind)) throw UsageError("--domain must be boolean or minmax");
  return kind;
}

struct MonitorArgs {
  std::string script, formula, trace, out, domain, format;
  std::vector<std::string> params;
  unsigned threads = 0;
};

int run_monitor(const MonitorArgs& a, std::ostream& out) {
  auto format = a.format.empty() ? io::format_from_path(a.out)
                : a.format == "csv" ? std::optional(io::ResultFormat::Csv)
                : a.format == "json" ? std::optional(io::ResultFormat::Json)
                                     : std::nullopt;
  if (!format) throw UsageError("cannot infer the result format; use a .csv/.json path or --format");
  const auto args = parse_params(a.params);
  std::optional<DomainKind> domain;
  if (!a.domain.empty()) domain = domain_option(a.domain);

  auto checked = std::make_shared<const script::CheckedScript>(script::load_script(read_file(a.script)));
  const io::Trace trace = io::load_trace(a.trace);
  MonitorRequest request{checked, a.formula, args, trace.model, trace.signal, domain};
  EngineStats stats;
  const MonitorResult result = monitor(request, {a.threads, &stats});
  io::write_result(result, a.out, *format, trace.location_names);
  out << "wrote " << a.out << " (" << result.location_count() << " locations x "
      << result.grid().size() << " times, " << to_string(result.domain()) << ")\n";
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Offline monitor for spatio-temporal reach and escape logic", "moonlight"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  MonitorArgs m;
  auto* monitor_cmd = app.add_subcommand("monitor", "Monitor a script formula over a trace");
  monitor_cmd->add_option("--script", m.script, "Script file (.mls)")->required();
  monitor_cmd->add_option("--formula", m.formula, "Formula name")->required();
  monitor_cmd->add_option("--param", m.params, "Formula argument NAME=VALUE (repeatable)");
  monitor_cmd->add_option("--trace", m.trace, "Trace file (.json)")->required();
  monitor_cmd->add_option("--domain", m.domain, "boolean or minmax (default: script domain)");
  monitor_cmd->add_option("--out", m.out, "Result file (.csv or .json)")->required();
  monitor_cmd->add_option("--format", m.format, "csv or json (default: from --out extension)");
  monitor_cmd->add_option("--threads", m.threads, "Worker threads (0: MOONLIGHT_THREADS or all cores)");

  std::string check_script;
  bool print_script = false;
  auto* check_cmd = app.add_subcommand("check", "Parse and type-check a script");
  check_cmd->add_option("script", check_script, "Script file (.mls)")->required();
  check_cmd->add_flag("--print", print_script, "Print the canonical form");

  auto* generate_cmd = app.add_subcommand("generate", "Write synthetic traces");
  generate_cmd->require_subcommand(1);
  gen::SensorNetworkOptions sensor;
  std::string sensor_out, sensor_script_out;
  auto* sensor_cmd = generate_cmd->add_subcommand("sensor", "Random geometric sensor network");
  sensor_cmd->add_option("--nodes", sensor.nodes, "Number of nodes")->check(CLI::PositiveNumber);
  sensor_cmd->add_option("--radius", sensor.radius, "Connection radius (default: calibrated)");
  sensor_cmd->add_option("--steps", sensor.steps, "Time steps")->check(CLI::PositiveNumber);
  sensor_cmd->add_option("--seed", sensor.seed, "Random seed");
  sensor_cmd->add_option("--side", sensor.side, "Side of the square field")->check(CLI::PositiveNumber);
  sensor_cmd->add_flag("--mobile", sensor.mobile, "Move nodes and emit one graph per step");
  sensor_cmd->add_option("--out", sensor_out, "Trace file (.json)")->required();
  sensor_cmd->add_option("--script-out", sensor_script_out, "Also write the sensor script here");

  gen::BenchmarkSpec spec;
  std::string auto_out, auto_script_out;
  auto* auto_cmd = generate_cmd->add_subcommand("automotive", "Synthetic transmission trace");
  auto_cmd->add_option("--omega-bar", spec.omega_bar, "Engine speed threshold");
  auto_cmd->add_option("--v-bar", spec.v_bar, "Vehicle speed threshold");
  auto_cmd->add_option("--horizon", spec.horizon, "Horizon T");
  auto_cmd->add_option("--length", spec.length, "Samples (6400 or 12800)");
  auto_cmd->add_option("--seed", spec.seed, "Random seed");
  auto_cmd->add_option("--out", auto_out, "Trace file (.json)")->required();
  auto_cmd->add_option("--script-out", auto_script_out, "Also write the R1..R4 script here");

  auto* bench_cmd = app.add_subcommand("bench", "Timing harness");
  bench_cmd->require_subcommand(1);
  bench::SpatialBenchOptions sb;
  std::vector<std::string> sb_domains;
  auto* bench_spatial = bench_cmd->add_subcommand("spatial", "Sensor network formulas");
  bench_spatial->add_option("--nodes", sb.nodes, "Number of nodes")->check(CLI::PositiveNumber);
  bench_spatial->add_option("--steps", sb.steps, "Time steps")->check(CLI::PositiveNumber);
  bench_spatial->add_option("--reps", sb.repetitions, "Repetitions")->check(CLI::PositiveNumber);
  bench_spatial->add_option("--seed", sb.seed, "Random seed");
  bench_spatial->add_option("--side", sb.side, "Side of the square field")->check(CLI::PositiveNumber);
  bench_spatial->add_option("--formula", sb.formulas, "Formula names (default by step count)");
  bench_spatial->add_option("--domain", sb_domains, "boolean and/or minmax (default: both)");
  bench_spatial->add_option("--threads", sb.workers, "Worker threads");

  bench::TemporalBenchOptions tb;
  auto* bench_temporal = bench_cmd->add_subcommand("temporal", "Transmission requirements R1..R4");
  bench_temporal->add_option("--length", tb.length, "Samples (6400 or 12800)");
  bench_temporal->add_option("--reps", tb.repetitions, "Repetitions")->check(CLI::PositiveNumber);
  bench_temporal->add_option("--seed", tb.seed, "Random seed");
  bench_temporal->add_option("--omega-bar", tb.omega_bar, "Engine speed threshold");
  bench_temporal->add_option("--v-bar", tb.v_bar, "Vehicle speed threshold");
  bench_temporal->add_option("--horizon", tb.horizon, "Horizon T");
  bench_temporal->add_option("--threads", tb.workers, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (monitor_cmd->parsed()) return run_monitor(m, out);

    if (check_cmd->parsed()) {
      const auto checked = script::load_script(read_file(check_script));
      if (print_script) out << script::to_string(checked.script());
      out << "ok: " << checked->formulas.size() << " formulas\n";
      return kOk;
    }

    if (sensor_cmd->parsed()) {
      io::write_trace(gen::generate_sensor_network(sensor), sensor_out);
      if (!sensor_script_out.empty()) std::ofstream(sensor_script_out) << gen::sensor_script_text();
      out << "wrote " << sensor_out << '\n';
      return kOk;
    }

    if (auto_cmd->parsed()) {
      io::write_trace(gen::generate_automotive_trace(spec), auto_out);
      if (!auto_script_out.empty()) std::ofstream(auto_script_out) << gen::automotive_script_text();
      out << "wrote " << auto_out << '\n';
      return kOk;
    }

    if (bench_spatial->parsed()) {
      if (!sb_domains.empty()) {
        sb.domains.clear();
        for (const auto& d : sb_domains) sb.domains.push_back(domain_option(d));
      }
      out << bench::format_table(bench::run_spatial_bench(sb));
      return kOk;
    }

    if (bench_temporal->parsed()) {
      out << bench::format_table(bench::run_temporal_bench(tb));
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const script::ScriptError& e) {
    for (const auto& d : e.diagnostics()) err << d.to_string() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace moonlight::cli
