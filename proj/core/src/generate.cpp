#include "moonlight/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moonlight/error.hpp"

namespace moonlight::gen {

std::size_t Rng::below(std::size_t n) {
  // Rejection sampling keeps the result unbiased and platform independent.
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

double default_edge_target(std::size_t n) {
  if (n < 2) return 0.0;
  const double nn = static_cast<double>(n);
  const double degree = std::min(17.0 * std::pow(nn / 100.0, -0.327), 0.4 * (nn - 1.0));
  return nn * degree;
}

double radius_for_edges(std::size_t n, double target_edges, double side) {
  if (n < 2 || target_edges <= 0) return 0.0;
  // Probability that two uniform points in the unit square lie within x.
  auto p = [](double x) {
    if (x >= std::numbers::sqrt2) return 1.0;
    if (x <= 1.0) return std::numbers::pi * x * x - 8.0 / 3.0 * x * x * x + x * x * x * x / 2.0;
    const double s = std::sqrt(x * x - 1.0);
    return 1.0 / 3.0 + (std::numbers::pi - 2.0) * x * x - x * x * x * x / 2.0 +
           4.0 / 3.0 * (2.0 * x * x + 1.0) * s - 4.0 * x * x * std::acos(1.0 / x);
  };
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  const double want = std::min(target_edges / pairs, 1.0);
  double lo = 0.0, hi = std::numbers::sqrt2;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (p(mid) < want ? lo : hi) = mid;
  }
  return hi * side;
}

double calibrated_radius(std::size_t n, double side) {
  return radius_for_edges(n, default_edge_target(n), side);
}

namespace {

struct Point {
  double x, y;
};

std::shared_ptr<const SpatialModel> geometric_graph(const std::vector<Point>& pos, double radius,
                                                    const RecordSchema& edge_schema) {
  std::vector<Edge> edges;
  const std::size_t n = pos.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = std::hypot(pos[i].x - pos[j].x, pos[i].y - pos[j].y);
      if (d <= radius) edges.push_back({i, j, {1.0, d}});
    }
  }
  return std::make_shared<const SpatialModel>(n, edge_schema, std::move(edges));
}

}  // namespace

io::Trace generate_sensor_network(const SensorNetworkOptions& o) {
  if (o.nodes == 0) throw ModelError("sensor network needs at least one node");
  if (o.steps == 0) throw ModelError("sensor network needs at least one step");
  if (!(o.side > 0)) throw ModelError("field side must be positive");
  const double radius = o.radius > 0 ? o.radius : calibrated_radius(o.nodes, o.side);
  const std::size_t n = o.nodes;
  Rng rng(o.seed);

  std::vector<Point> pos(n);
  for (auto& p : pos) p = {rng.uniform(0, o.side), rng.uniform(0, o.side)};

  // Node roles: a random permutation assigns one coordinator, then routers.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  const std::size_t routers = std::min<std::size_t>(
      n - 1, static_cast<std::size_t>(std::llround(0.2 * static_cast<double>(n))));
  std::vector<double> type(n, 3.0);
  type[order[0]] = 1.0;
  for (std::size_t i = 1; i <= routers; ++i) type[order[i]] = 2.0;

  std::vector<double> battery(n), temperature(n);
  for (std::size_t i = 0; i < n; ++i) {
    battery[i] = rng.uniform(0.2, 1.0);
    temperature[i] = rng.uniform(15.0, 30.0);
  }

  const RecordSchema schema({{"nodeType", ValueType::Int},
                             {"battery", ValueType::Real},
                             {"temperature", ValueType::Real}});
  const RecordSchema edge_schema({{"hop", ValueType::Int}, {"dist", ValueType::Real}});

  std::vector<double> times(o.steps);
  std::vector<double> values(n * o.steps * 3);
  std::vector<DynamicSpatialModel::Frame> frames;
  for (std::size_t k = 0; k < o.steps; ++k) {
    times[k] = static_cast<double>(k);
    if (k > 0) {
      for (std::size_t i = 0; i < n; ++i) {
        battery[i] = std::max(0.0, battery[i] - rng.uniform(0.0, 0.02));
        temperature[i] = std::clamp(temperature[i] + rng.uniform(-0.5, 0.5), 0.0, 50.0);
        if (o.mobile) {
          const double step = 0.02 * o.side;
          pos[i].x = std::clamp(pos[i].x + rng.uniform(-step, step), 0.0, o.side);
          pos[i].y = std::clamp(pos[i].y + rng.uniform(-step, step), 0.0, o.side);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      double* row = &values[(i * o.steps + k) * 3];
      row[0] = type[i];
      row[1] = battery[i];
      row[2] = temperature[i];
    }
    if (k == 0 || o.mobile) frames.push_back({times[k], geometric_graph(pos, radius, edge_schema)});
  }

  io::Trace trace;
  trace.location_names = io::default_location_names(n);
  trace.signal = std::make_shared<const SpatioTemporalSignal>(schema, TimeGrid(std::move(times)), n,
                                                              std::move(values));
  trace.model = std::make_shared<const DynamicSpatialModel>(std::move(frames));
  return trace;
}

void BenchmarkSpec::validate() const {
  auto in = [](double x, const auto& set) { return std::find(std::begin(set), std::end(set), x) != std::end(set); };
  if (!in(omega_bar, kOmegaBars)) throw ModelError("omega_bar must be one of 4500, 5000, 5200, 5500");
  if (!in(v_bar, kVBars)) throw ModelError("v_bar must be one of 120, 160, 170, 200");
  if (!in(horizon, kHorizons)) throw ModelError("T must be one of 4, 8, 10, 20");
  if (std::find(std::begin(kTraceLengths), std::end(kTraceLengths), length) == std::end(kTraceLengths)) {
    throw ModelError("trace length must be 6400 or 12800");
  }
}

io::Trace generate_automotive_trace(const BenchmarkSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  // Upper speed of each gear, mph; engine speed sweeps 1000..6000 rpm within a gear.
  constexpr double kGearTop[] = {35, 70, 110, 160, 230};
  constexpr double kSamplesPerUnit = 100.0;

  std::vector<double> times(spec.length);
  std::vector<double> values(spec.length * 2);
  double v = rng.uniform(0, 40);
  double target = rng.uniform(0, 220);
  double hold = rng.uniform(2, 8);
  for (std::size_t k = 0; k < spec.length; ++k) {
    const double t = static_cast<double>(k) / kSamplesPerUnit;
    times[k] = t;
    hold -= 1.0 / kSamplesPerUnit;
    if (hold <= 0) {
      target = rng.uniform(0, 220);
      hold = rng.uniform(2, 8);
    }
    v += (target - v) * 0.004 + rng.uniform(-0.05, 0.05);
    v = std::clamp(v, 0.0, 225.0);
    std::size_t gear = 0;
    while (gear + 1 < std::size(kGearTop) && v > kGearTop[gear]) ++gear;
    const double low = gear == 0 ? 0.0 : kGearTop[gear - 1];
    const double frac = (v - low) / (kGearTop[gear] - low);
    const double omega = std::clamp(1000.0 + 5000.0 * frac + rng.uniform(-40, 40), 800.0, 6200.0);
    values[2 * k] = omega;
    values[2 * k + 1] = v;
  }

  io::Trace trace;
  trace.location_names = {"car"};
  trace.signal = std::make_shared<const SpatioTemporalSignal>(
      RecordSchema({{"omega", ValueType::Real}, {"v", ValueType::Real}}), TimeGrid(std::move(times)),
      1, std::move(values));
  return trace;
}

std::string_view sensor_script_text() {
  return R"(signal { int nodeType;  real battery;  real temperature; }
space { edges { int hop; real dist; }  }
domain boolean;
formula atom = (nodeType==3);
formula P1 = atom reach(hop)[0, 1]{(nodeType==1)|(nodeType==2)};
formula Ppar(int k) = atom reach(hop)[0, k] (nodeType== 1);
formula P2 = escape(hop)[5,inf] (battery > 0.5);
formula P3 = somewhere(dist)[0,250] (battery > 0.5);
formula P4 = (nodeType==3) reach(hop)[0,1]{(nodeType==2) reach(hop)[0,5](nodeType==1)};
formula PT1 = (battery <= 0.5) reach(hop)[0, 10] eventually(battery > 0.5);
formula PT2 = globally P4;
)";
}

std::string_view automotive_script_text() {
  return R"(signal { real omega; real v; }
domain minmax;
formula R1(real wbar) = globally (omega < wbar);
formula R2(real wbar, real vbar) = globally ((omega < wbar) & (v < vbar));
formula R3(real wbar, real vbar, real T) = !(eventually [0, T] (v > vbar) & globally (omega < wbar));
formula R4(real wbar, real vbar, real T) = eventually [0, T] ((v >= vbar) & globally (omega < wbar));
)";
}

}  // namespace moonlight::gen
