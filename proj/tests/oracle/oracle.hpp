#pragma once

// Brute-force reference semantics. Depends only on the core data types
// (AST, signal, spatial model, domains, result), never on the temporal,
// spatial or engine algorithms.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "moonlight/domain.hpp"
#include "moonlight/interval.hpp"
#include "moonlight/result.hpp"
#include "moonlight/script/ast.hpp"
#include "moonlight/signal.hpp"
#include "moonlight/spatial_model.hpp"

namespace moonlight::oracle {

struct OracleBudget {
  std::size_t max_locations = 6;
  std::size_t max_time_points = 8;
  std::size_t max_path_length = 16;  ///< edges per enumerated walk
  double max_distance = 64.0;        ///< largest finite interval bound accepted
  std::uint64_t shuffle_seed = 0;    ///< nonzero: visit edges in a seeded random order
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluates a closed formula by literal enumeration. Spatial operators
/// require strictly positive edge lengths. Throws BudgetExceeded instead of
/// truncating.
MonitorResult oracle_monitor(const script::Formula& formula, const SpatioTemporalSignal& signal,
                             const DynamicSpatialModel* model, DomainKind domain,
                             const OracleBudget& budget = {});

// Per-operator enumerators, exposed for focused tests. Values are carried
// as doubles for both domains: booleans as 0/1.

using Column = std::vector<double>;

Column until_enum(DomainKind domain, const std::vector<double>& times, const Column& lhs,
                  const Column& rhs, const Interval& w);
Column since_enum(DomainKind domain, const std::vector<double>& times, const Column& lhs,
                  const Column& rhs, const Interval& w);
/// join (eventually/once) or meet (globally/historically) over the window;
/// `past` selects once/historically.
Column window_enum(DomainKind domain, const std::vector<double>& times, const Column& s,
                   const Interval& w, bool join, bool past);

/// Minimum accumulated length over simple paths; +inf when unreachable.
std::vector<std::vector<double>> distance_matrix_enum(const SpatialModel& g,
                                                      const std::vector<double>& lengths);

Column reach_enum(DomainKind domain, const SpatialModel& g, const std::vector<double>& lengths,
                  const Column& s1, const Column& s2, const Interval& w,
                  const OracleBudget& budget = {});
Column escape_enum(DomainKind domain, const SpatialModel& g, const std::vector<double>& lengths,
                   const Column& s, const Interval& w, const OracleBudget& budget = {});

}  // namespace moonlight::oracle
