#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "moonlight/domain.hpp"
#include "moonlight/engine.hpp"
#include "moonlight/generate.hpp"

namespace moonlight::bench {

struct TimingRow {
  std::string formula;
  DomainKind domain = DomainKind::Boolean;
  std::size_t nodes = 0;
  std::size_t steps = 0;
  std::size_t repetitions = 0;
  double mean_seconds = 0.0;
  double min_seconds = 0.0;
};

struct Timing {
  double mean_seconds = 0.0;
  double min_seconds = 0.0;
};

/// Runs `request` `repetitions` times sequentially and reports wall times.
Timing time_monitor(const MonitorRequest& request, std::size_t repetitions,
                    const EngineOptions& options = {});

struct SpatialBenchOptions {
  std::size_t nodes = 100;
  std::size_t steps = 1;
  std::size_t repetitions = 50;
  std::uint64_t seed = 1;
  double side = gen::kDefaultFieldSide;
  /// Empty selects P2, P3, P4 for one step and PT1, PT2 otherwise.
  std::vector<std::string> formulas;
  std::vector<DomainKind> domains = {DomainKind::Boolean, DomainKind::MinMax};
  unsigned workers = 0;
};

std::vector<TimingRow> run_spatial_bench(const SpatialBenchOptions& options);

struct TemporalBenchOptions {
  std::size_t length = 12800;
  std::size_t repetitions = 20;
  std::uint64_t seed = 1;
  double omega_bar = 4500;
  double v_bar = 120;
  double horizon = 4;
  unsigned workers = 0;
};

/// Times R1..R4 in the quantitative domain on one synthetic trace.
std::vector<TimingRow> run_temporal_bench(const TemporalBenchOptions& options);

/// Fixed-width table with a header line.
std::string format_table(const std::vector<TimingRow>& rows);

}  // namespace moonlight::bench
