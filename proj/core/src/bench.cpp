#include "moonlight/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>

#include "moonlight/generate.hpp"

namespace moonlight::bench {

Timing time_monitor(const MonitorRequest& request, std::size_t repetitions,
                    const EngineOptions& options) {
  using clock = std::chrono::steady_clock;
  Timing timing{0.0, std::numeric_limits<double>::infinity()};
  const std::size_t reps = std::max<std::size_t>(repetitions, 1);
  double total = 0.0;
  for (std::size_t i = 0; i < reps; ++i) {
    const auto start = clock::now();
    const MonitorResult result = monitor(request, options);
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    total += seconds;
    timing.min_seconds = std::min(timing.min_seconds, seconds);
    if (result.location_count() == 0) break;  // keeps the result observable
  }
  timing.mean_seconds = total / static_cast<double>(reps);
  return timing;
}

std::vector<TimingRow> run_spatial_bench(const SpatialBenchOptions& o) {
  gen::SensorNetworkOptions net;
  net.nodes = o.nodes;
  net.steps = o.steps;
  net.seed = o.seed;
  net.side = o.side;
  const io::Trace trace = gen::generate_sensor_network(net);
  auto script = std::make_shared<const script::CheckedScript>(
      script::load_script(gen::sensor_script_text()));

  std::vector<std::string> formulas = o.formulas;
  if (formulas.empty()) {
    formulas = o.steps == 1 ? std::vector<std::string>{"P2", "P3", "P4"}
                            : std::vector<std::string>{"PT1", "PT2"};
  }
  std::vector<TimingRow> rows;
  for (const auto& name : formulas) {
    for (DomainKind domain : o.domains) {
      MonitorRequest request{script, name, {}, trace.model, trace.signal, domain};
      const Timing t = time_monitor(request, o.repetitions, {o.workers, nullptr});
      rows.push_back({name, domain, o.nodes, o.steps, o.repetitions, t.mean_seconds, t.min_seconds});
    }
  }
  return rows;
}

std::vector<TimingRow> run_temporal_bench(const TemporalBenchOptions& o) {
  gen::BenchmarkSpec spec{o.omega_bar, o.v_bar, o.horizon, o.length, o.seed};
  const io::Trace trace = gen::generate_automotive_trace(spec);
  auto script = std::make_shared<const script::CheckedScript>(
      script::load_script(gen::automotive_script_text()));
  const script::FormulaArgs all{{"wbar", o.omega_bar}, {"vbar", o.v_bar}, {"T", o.horizon}};

  std::vector<TimingRow> rows;
  for (const char* name : {"R1", "R2", "R3", "R4"}) {
    script::FormulaArgs args;
    for (const auto& p : (*script)->find(name)->params) args[p.name] = all.at(p.name);
    MonitorRequest request{script, name, args, nullptr, trace.signal, DomainKind::MinMax};
    const Timing t = time_monitor(request, o.repetitions, {o.workers, nullptr});
    rows.push_back({name, DomainKind::MinMax, 1, o.length, o.repetitions, t.mean_seconds,
                    t.min_seconds});
  }
  return rows;
}

std::string format_table(const std::vector<TimingRow>& rows) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-8s %-8s %8s %8s %6s %14s %14s\n", "formula", "domain",
                "nodes", "steps", "reps", "mean_s", "min_s");
  out += line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-8s %-8s %8zu %8zu %6zu %14.6f %14.6f\n", r.formula.c_str(),
                  std::string(to_string(r.domain)).c_str(), r.nodes, r.steps, r.repetitions,
                  r.mean_seconds, r.min_seconds);
    out += line;
  }
  return out;
}

}  // namespace moonlight::bench
