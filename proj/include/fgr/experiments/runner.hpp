#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fgr/experiments/scenario.hpp"
#include "fgr/models/state.hpp"

namespace fgr {

/// Per-run overrides of scenario fields (CLI flags map onto these).
struct RunOptions {
  Tier tier = Tier::ci;
  std::optional<std::size_t> n_nodes;
  std::optional<double> dt;
  std::optional<double> t_final;
  std::optional<std::string> tableau;
  std::optional<ConservationMode> conservation;
  std::optional<double> beta;
  std::optional<double> tau;
  std::optional<std::size_t> output_every;
  ConservationPolicy policy;  // mode is taken from the scenario/override
  /// Fine reference resolution: n * fine_node_factor nodes and step
  /// dt / fine_step_divisor.
  std::size_t fine_node_factor = 4;
  double fine_step_divisor = 100.0;
  /// Where the last good state is written when a step fails; empty means the
  /// system temporary directory.
  std::string snapshot_dir;
};

/// Scenario with the overrides applied (validated).
Scenario resolve_scenario(const Scenario& base, const RunOptions& opts);

struct ScenarioRow {
  double t = 0.0;
  double mass_rel_drift = 0.0;
  double momentum_rel_drift = 0.0;
  double energy_rel_drift = 0.0;
  double l2_error = 0.0;  // NaN when the scenario has no reference
  double gamma = 1.0;
};

struct ScenarioSummary {
  double max_mass_drift = 0.0;
  double max_momentum_drift = 0.0;
  double max_energy_drift = 0.0;
  double final_error = 0.0;  // NaN without reference
  double max_gamma_deviation = 0.0;
  /// Least-squares slope of log(error) against log(t - t0) over the fit
  /// window; NaN if the window holds fewer than 3 usable rows.
  double error_slope = 0.0;
  double wall_seconds = 0.0;
  std::size_t steps = 0;
  std::size_t root_evaluations = 0;
  std::size_t max_root_evaluations = 0;
  std::size_t degenerate_steps = 0;
};

struct ScenarioResult {
  Scenario scenario;  // resolved
  Tier tier = Tier::ci;
  ConservationPolicy policy;
  InvariantTriple initial;
  std::vector<ScenarioRow> rows;
  ScenarioSummary summary;
  State final_state;
  double final_time = 0.0;
};

/// Called after every step with (step index, time, state); used by studies
/// that need more than the logged rows.
using StepObserver = std::function<void(std::size_t, double, const State&)>;

/// Integrates the scenario with a fixed number of steps. With relaxation
/// every step conserves the invariants of the initial state, time advances by
/// gamma * dt and errors are measured at those relaxed times. A numerical
/// failure is rethrown as IntegrationFailure after the last good state has
/// been written to a snapshot file.
ScenarioResult run_scenario(const Scenario& scenario, const RunOptions& opts = {},
                            const StepObserver& observer = {});

/// |a - b| / |b|, or |a - b| when b == 0.
double relative_drift(double value, double initial);

/// Least-squares slope of log(y) against log(x) over points with x, y > 0.
/// NaN for fewer than 3 points.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace fgr
