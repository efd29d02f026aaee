#pragma once

#include <string>
#include <vector>

#include "fgr/experiments/runner.hpp"

namespace fgr {

struct ErrorGrowthEntry {
  ConservationMode mode = ConservationMode::none;
  double slope = 0.0;  // NaN when the fit window is degenerate
  double final_error = 0.0;
  ScenarioSummary summary;
};

/// Runs the scenario once per conservation mode and fits log(error) against
/// log(t - t0) over the scenario's fit window.
std::vector<ErrorGrowthEntry> error_growth_study(const Scenario& scenario,
                                                 const std::vector<ConservationMode>& modes,
                                                 const RunOptions& opts = {});

struct ConvergenceLevel {
  double dt = 0.0;
  double final_time = 0.0;  // relaxed time of the last step
  double error = 0.0;       // NaN if the run failed
  double max_gamma_deviation = 0.0;
  std::size_t degenerate_steps = 0;
  std::string failure;  // empty on success
};

struct ConvergenceStudy {
  std::vector<ConvergenceLevel> levels;
  /// Least-squares slope of log(error) against log(dt).
  double observed_order = 0.0;
  /// Same for max |gamma - 1|; NaN when fewer than 3 levels have gamma != 1.
  double gamma_slope = 0.0;
  std::size_t reference_nodes = 0;
  double reference_step = 0.0;
};

struct ConvergenceOptions {
  int levels = 4;  // dt, dt/2, ..., dt/2^(levels-1)
  std::size_t fine_node_factor = 4;
  /// Reference step = smallest dt / this.
  double fine_step_divisor = 16.0;
};

/// dt-halving study: each level runs the scenario with dt / 2^k to the same
/// final time; errors are taken at each level's relaxed final time against
/// one fine baseline trajectory.
ConvergenceStudy convergence_study(const Scenario& scenario, const ConvergenceOptions& copts = {},
                                   const RunOptions& opts = {});

struct BenchReport {
  std::string case_name;
  std::string scenario;
  std::vector<double> seconds;  // timed repeats (after one warmup run)
  double median_seconds = 0.0;
  double final_error = 0.0;
  std::size_t steps = 0;
  /// Numbers quoted for the reference implementation, kept as metadata.
  double quoted_seconds = 0.0;
  double quoted_comparison_error = 0.0;  // 0 if none
};

/// Cases "bbm-s5" and "nls-s5". Throws ContractViolation for others.
BenchReport perf_bench(const std::string& case_name, int repeats = 3);
std::vector<std::string> bench_cases();

struct HyperbolizationEntry {
  double tau = 0.0;
  /// Discrete L2 distance between the (v, w) parts of the hyperbolized run
  /// and the NLS run at the final step.
  double deviation = 0.0;
  double time_mismatch = 0.0;  // difference of the relaxed final times
  double error = 0.0;          // hyperbolized run against the scenario reference
  double max_mass_drift = 0.0;
  double max_energy_drift = 0.0;
  double max_momentum_drift = 0.0;
  double final_momentum_drift = 0.0;
};

struct HyperbolizationReport {
  std::string scenario;
  double nls_error = 0.0;
  std::vector<HyperbolizationEntry> entries;
};

/// Runs the hyperbolized scenario for each tau and the plain NLS equation on
/// the same data, grid, tableau and policy.
HyperbolizationReport hyperbolization_study(const std::vector<double>& taus,
                                            const RunOptions& opts = {},
                                            const std::string& scenario = "fig7-hypnls");

std::string to_json(const std::vector<ErrorGrowthEntry>& study);
std::string to_json(const ConvergenceStudy& study);
std::string to_json(const BenchReport& report);
std::string to_json(const HyperbolizationReport& report);

}  // namespace fgr
