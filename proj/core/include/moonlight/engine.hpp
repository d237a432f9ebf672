#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "moonlight/domain.hpp"
#include "moonlight/result.hpp"
#include "moonlight/script/checker.hpp"
#include "moonlight/signal.hpp"
#include "moonlight/spatial_model.hpp"

namespace moonlight {

struct MonitorRequest {
  std::shared_ptr<const script::CheckedScript> script;
  std::string formula;
  script::FormulaArgs args;
  /// Required when the instantiated formula has spatial operators.
  std::shared_ptr<const DynamicSpatialModel> model;
  std::shared_ptr<const SpatioTemporalSignal> signal;
  /// Falls back to the script's declared domain.
  std::optional<DomainKind> domain;
};

struct EngineStats {
  std::size_t cache_hits = 0;    ///< per-time distance lookups served from the cache
  std::size_t cache_misses = 0;  ///< (frame, distance expression) pairs computed
  std::size_t spatial_evaluations = 0;
  std::size_t max_reach_rounds = 0;
  std::size_t reach_states = 0;
};

struct EngineOptions {
  unsigned workers = 0;  ///< 0 means default_worker_count()
  EngineStats* stats = nullptr;
};

/// Instantiates the requested formula and monitors it on every location
/// and grid time. Throws MonitorError for inconsistent inputs and
/// script::ScriptError for instantiation failures.
MonitorResult monitor(const MonitorRequest& request, const EngineOptions& options = {});

/// Monitors a closed formula (no parameters or references) against
/// `signal`. `model` may be null for purely temporal formulas.
MonitorResult monitor_formula(const script::Formula& formula, const SpatioTemporalSignal& signal,
                              const DynamicSpatialModel* model, DomainKind domain,
                              const EngineOptions& options = {});

}  // namespace moonlight
