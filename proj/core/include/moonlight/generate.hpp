#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "moonlight/io/trace_file.hpp"

namespace moonlight::gen {

/// Portable random source: std::mt19937_64 (fully specified by the
/// standard) with hand-written conversions, so a seed yields the same
/// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n); n > 0.
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Side of the square field that sensor nodes are scattered over.
inline constexpr double kDefaultFieldSide = 3000.0;

struct SensorNetworkOptions {
  std::size_t nodes = 10;
  double radius = 0.0;  ///< <= 0 selects calibrated_radius(nodes, side)
  std::size_t steps = 1;
  std::uint64_t seed = 1;
  double side = kDefaultFieldSide;
  /// Re-sample positions each step and emit one frame per step.
  bool mobile = false;
};

/// Target number of directed edges for n nodes: mean out-degree 17 at 100
/// nodes, decaying as n^-0.327 (8 at 1000 nodes), capped at 40% of n - 1.
double default_edge_target(std::size_t n);

/// Radius giving `target_edges` directed edges in expectation for n nodes
/// uniform on a side x side square (border effects included).
double radius_for_edges(std::size_t n, double target_edges, double side);

double calibrated_radius(std::size_t n, double side = kDefaultFieldSide);

/// Random geometric sensor network with node types (1 coordinator, about
/// 20% routers (2), the rest end devices (3)), per-node battery
/// (non-increasing) and temperature, and edges labelled hop = 1 and
/// dist = Euclidean length. Times are 0, 1, ..., steps - 1.
io::Trace generate_sensor_network(const SensorNetworkOptions& options);

/// Parameters of one automotive run.
struct BenchmarkSpec {
  double omega_bar = 4500;
  double v_bar = 120;
  double horizon = 4;  ///< T
  std::size_t length = 6400;
  std::uint64_t seed = 1;

  /// Throws ModelError unless omega_bar, v_bar, horizon and length come
  /// from the benchmark parameter sets.
  void validate() const;
};

inline constexpr double kOmegaBars[] = {4500, 5000, 5200, 5500};
inline constexpr double kVBars[] = {120, 160, 170, 200};
inline constexpr double kHorizons[] = {4, 8, 10, 20};
inline constexpr std::size_t kTraceLengths[] = {6400, 12800};

/// Single-location trace "car" with variables omega (engine speed, rpm)
/// and v (vehicle speed, mph) sampled every 0.01 time units.
io::Trace generate_automotive_trace(const BenchmarkSpec& spec);

/// Monitor script for the sensor network example (properties over
/// nodeType, battery, temperature with hop/dist edges).
std::string_view sensor_script_text();
/// Monitor script with the four transmission requirements R1..R4.
std::string_view automotive_script_text();

}  // namespace moonlight::gen
