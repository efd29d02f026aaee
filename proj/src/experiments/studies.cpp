#include "fgr/experiments/studies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "fgr/errors.hpp"
#include "fgr/reference/residual.hpp"
#include "fgr/spectral/operations.hpp"

namespace fgr {

namespace {

using nlohmann::json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<std::vector<double>> primary_nodal(const State& s, std::size_t comps) {
  std::vector<std::vector<double>> out;
  for (std::size_t c = 0; c < comps; ++c) {
    out.push_back(evaluate_on_grid(s[c], s.grid().n_nodes()));
  }
  return out;
}

}  // namespace

std::vector<ErrorGrowthEntry> error_growth_study(const Scenario& scenario,
                                                 const std::vector<ConservationMode>& modes,
                                                 const RunOptions& opts) {
  std::vector<ErrorGrowthEntry> out;
  for (ConservationMode m : modes) {
    RunOptions o = opts;
    o.conservation = m;
    const ScenarioResult r = run_scenario(scenario, o);
    out.push_back({m, r.summary.error_slope, r.summary.final_error, r.summary});
  }
  return out;
}

ConvergenceStudy convergence_study(const Scenario& scenario, const ConvergenceOptions& copts,
                                   const RunOptions& opts) {
  if (copts.levels < 2) throw ContractViolation("convergence_study: need at least 2 levels");
  Scenario base = resolve_scenario(scenario, opts);
  base.reference = ReferenceKind::none;
  const double t_final = base.t_final(opts.tier);

  ConvergenceStudy study;
  std::vector<State> finals;
  for (int k = 0; k < copts.levels; ++k) {
    RunOptions o = opts;
    o.dt = base.dt / std::ldexp(1.0, k);
    o.t_final = t_final;
    o.n_nodes.reset();
    o.conservation.reset();
    ConvergenceLevel lvl;
    lvl.dt = *o.dt;
    try {
      ScenarioResult r = run_scenario(base, o);
      lvl.final_time = r.final_time;
      lvl.max_gamma_deviation = r.summary.max_gamma_deviation;
      lvl.degenerate_steps = r.summary.degenerate_steps;
      finals.push_back(std::move(r.final_state));
    } catch (const NumericalError& e) {
      lvl.failure = e.what();
      lvl.error = kNaN;
      finals.emplace_back();
    }
    study.levels.push_back(lvl);
  }

  study.reference_nodes = base.n_nodes * copts.fine_node_factor;
  study.reference_step = study.levels.back().dt / copts.fine_step_divisor;
  FineReference ref(base.equation, base.params, base.xmin, base.xmax, study.reference_nodes,
                    study.reference_step, base.initial, base.t0);
  std::vector<std::size_t> order(study.levels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return study.levels[a].final_time < study.levels[b].final_time;
  });
  for (std::size_t i : order) {
    auto& lvl = study.levels[i];
    if (!lvl.failure.empty()) continue;
    lvl.error = nodal_l2_error(finals[i], ref.nodal_at(lvl.final_time, base.n_nodes));
  }

  std::vector<double> dts, errs, gams;
  for (const auto& l : study.levels) {
    dts.push_back(l.dt);
    errs.push_back(l.error);
    gams.push_back(l.max_gamma_deviation);
  }
  study.observed_order = loglog_slope(dts, errs);
  study.gamma_slope = loglog_slope(dts, gams);
  return study;
}

std::vector<std::string> bench_cases() { return {"bbm-s5", "nls-s5"}; }

BenchReport perf_bench(const std::string& case_name, int repeats) {
  BenchReport rep;
  rep.case_name = case_name;
  if (case_name == "bbm-s5") {
    rep.scenario = "s5-bbm";
    rep.quoted_seconds = 0.40;
  } else if (case_name == "nls-s5") {
    rep.scenario = "s5-nls";
    rep.quoted_seconds = 0.36;
    rep.quoted_comparison_error = 1.26e-6;
  } else {
    throw ContractViolation("unknown bench case '" + case_name + "' (expected bbm-s5 or nls-s5)");
  }
  if (repeats < 1) throw ContractViolation("perf_bench: repeats must be positive");
  const Scenario& s = find_scenario(rep.scenario);
  RunOptions o;
  o.output_every = s.steps(Tier::ci);  // only the end points are logged
  run_scenario(s, o);                   // warmup
  for (int i = 0; i < repeats; ++i) {
    const ScenarioResult r = run_scenario(s, o);
    rep.seconds.push_back(r.summary.wall_seconds);
    rep.final_error = r.summary.final_error;
    rep.steps = r.summary.steps;
  }
  std::vector<double> sorted = rep.seconds;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  rep.median_seconds = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
  return rep;
}

HyperbolizationReport hyperbolization_study(const std::vector<double>& taus,
                                            const RunOptions& opts,
                                            const std::string& scenario) {
  const Scenario& hyp = find_scenario(scenario);
  if (hyp.equation != Equation::hypnls) {
    throw ContractViolation("hyperbolization_study: " + scenario + " is not a hyperbolized scenario");
  }
  HyperbolizationReport rep;
  rep.scenario = scenario;

  Scenario nls = hyp;
  nls.name = hyp.name + "-nls";
  nls.equation = Equation::nls;
  RunOptions nls_opts = opts;
  nls_opts.tau.reset();
  const ScenarioResult base = run_scenario(nls, nls_opts);
  rep.nls_error = base.summary.final_error;
  const auto base_nodal = primary_nodal(base.final_state, 2);

  for (double tau : taus) {
    RunOptions o = opts;
    o.tau = tau;
    const ScenarioResult r = run_scenario(hyp, o);
    HyperbolizationEntry e;
    e.tau = tau;
    e.deviation = nodal_l2_error(r.final_state, base_nodal);
    e.time_mismatch = std::abs(r.final_time - base.final_time);
    e.error = r.summary.final_error;
    e.max_mass_drift = r.summary.max_mass_drift;
    e.max_energy_drift = r.summary.max_energy_drift;
    e.max_momentum_drift = r.summary.max_momentum_drift;
    e.final_momentum_drift = r.rows.back().momentum_rel_drift;
    rep.entries.push_back(e);
  }
  return rep;
}

std::string to_json(const std::vector<ErrorGrowthEntry>& study) {
  json j = json::array();
  for (const auto& e : study) {
    j.push_back({{"mode", to_string(e.mode)},
                 {"slope", num(e.slope)},
                 {"final_error", num(e.final_error)},
                 {"max_mass_drift", e.summary.max_mass_drift},
                 {"max_momentum_drift", e.summary.max_momentum_drift},
                 {"max_energy_drift", e.summary.max_energy_drift},
                 {"wall_seconds", e.summary.wall_seconds}});
  }
  return j.dump(2);
}

std::string to_json(const ConvergenceStudy& study) {
  json levels = json::array();
  for (const auto& l : study.levels) {
    json e = {{"dt", l.dt},
              {"final_time", l.final_time},
              {"error", num(l.error)},
              {"max_gamma_deviation", l.max_gamma_deviation},
              {"degenerate_steps", l.degenerate_steps}};
    if (!l.failure.empty()) e["failure"] = l.failure;
    levels.push_back(std::move(e));
  }
  json j = {{"levels", std::move(levels)},
            {"observed_order", num(study.observed_order)},
            {"gamma_slope", num(study.gamma_slope)},
            {"reference_nodes", study.reference_nodes},
            {"reference_step", study.reference_step}};
  return j.dump(2);
}

std::string to_json(const BenchReport& r) {
  json j = {{"case", r.case_name},
            {"scenario", r.scenario},
            {"seconds", r.seconds},
            {"median_seconds", r.median_seconds},
            {"final_error", num(r.final_error)},
            {"steps", r.steps},
            {"quoted_seconds", r.quoted_seconds}};
  if (r.quoted_comparison_error > 0.0) j["quoted_comparison_error"] = r.quoted_comparison_error;
  return j.dump(2);
}

std::string to_json(const HyperbolizationReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"tau", e.tau},
                       {"deviation", e.deviation},
                       {"time_mismatch", e.time_mismatch},
                       {"error", num(e.error)},
                       {"max_mass_drift", e.max_mass_drift},
                       {"max_energy_drift", e.max_energy_drift},
                       {"max_momentum_drift", e.max_momentum_drift},
                       {"final_momentum_drift", e.final_momentum_drift}});
  }
  json j = {{"scenario", r.scenario}, {"nls_error", num(r.nls_error)}, {"entries", std::move(entries)}};
  return j.dump(2);
}

}  // namespace fgr
