#include "fgr/experiments/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <memory>

#include "fgr/conservation/relaxation.hpp"
#include "fgr/errors.hpp"
#include "fgr/experiments/output.hpp"
#include "fgr/reference/residual.hpp"
#include "fgr/time/ark.hpp"

namespace fgr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string snapshot_path(const RunOptions& opts, const std::string& name, std::size_t step) {
  std::error_code ec;
  std::filesystem::path dir = opts.snapshot_dir.empty()
                                  ? std::filesystem::temp_directory_path(ec)
                                  : std::filesystem::path(opts.snapshot_dir);
  if (ec) dir = ".";
  return (dir / (name + "-step" + std::to_string(step) + ".json")).string();
}

}  // namespace

double relative_drift(double value, double initial) {
  const double d = std::abs(value - initial);
  return initial == 0.0 ? d : d / std::abs(initial);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double n = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(x[i]) || !std::isfinite(y[i])) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    n += 1.0;
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (n < 3.0 || !(den > 0.0)) return kNaN;
  return (n * sxy - sx * sy) / den;
}

Scenario resolve_scenario(const Scenario& base, const RunOptions& opts) {
  Scenario s = base;
  if (opts.n_nodes) s.n_nodes = *opts.n_nodes;
  if (opts.dt) s.dt = *opts.dt;
  if (opts.t_final) s.t_final_ci = s.t_final_full = *opts.t_final;
  if (opts.tableau) s.tableau = *opts.tableau;
  if (opts.conservation) s.conservation = *opts.conservation;
  if (opts.beta) s.params.beta = *opts.beta;
  if (opts.tau) s.params.tau = *opts.tau;
  if (opts.output_every) s.output_every = *opts.output_every;
  if (opts.dt && !opts.t_final) {
    // Round the spans to whole steps of the new size.
    for (double* tf : {&s.t_final_ci, &s.t_final_full}) {
      const double k = std::max(1.0, std::round((*tf - s.t0) / s.dt));
      *tf = s.t0 + k * s.dt;
    }
  }
  s.validate();
  return s;
}

ScenarioResult run_scenario(const Scenario& scenario, const RunOptions& opts,
                            const StepObserver& observer) {
  ScenarioResult res;
  res.scenario = resolve_scenario(scenario, opts);
  res.tier = opts.tier;
  const Scenario& s = res.scenario;

  const auto grid = SpectralGrid::make(s.xmin, s.xmax, s.n_nodes);
  const auto model = make_model(s.equation, grid, s.params);
  ArkStepper stepper(*model, tableau_by_name(s.tableau));
  res.policy = opts.policy;
  res.policy.mode = s.conservation;
  const ConservationPolicy& policy = res.policy;

  State u = sample_state(s.equation, grid, s.initial, s.t0);
  res.initial = model->invariants(u);
  const InvariantTriple& I0 = res.initial;

  std::unique_ptr<FineReference> fine;
  if (s.reference == ReferenceKind::fine_reference) {
    fine = std::make_unique<FineReference>(s.equation, s.params, s.xmin, s.xmax,
                                           s.n_nodes * opts.fine_node_factor,
                                           s.dt / opts.fine_step_divisor, s.initial, s.t0);
  }
  auto error_at = [&](double t, const State& v) {
    switch (s.reference) {
      case ReferenceKind::closed_form:
        return nodal_l2_error(v, sample_nodal(s.equation, *grid, s.initial, t));
      case ReferenceKind::fine_reference:
        return nodal_l2_error(v, fine->nodal_at(t, s.n_nodes));
      case ReferenceKind::none: break;
    }
    return kNaN;
  };

  auto& sum = res.summary;
  auto make_row = [&](double t, const InvariantTriple& inv, double gamma, double err) {
    return ScenarioRow{t, relative_drift(inv.mass, I0.mass),
                       relative_drift(inv.momentum, I0.momentum),
                       relative_drift(inv.energy, I0.energy), err, gamma};
  };

  const auto start = std::chrono::steady_clock::now();
  const std::size_t steps = s.steps(opts.tier);
  double t = s.t0;
  res.rows.push_back(make_row(t, I0, 1.0, error_at(t, u)));

  State provisional;
  for (std::size_t i = 1; i <= steps; ++i) {
    double gamma = 1.0;
    try {
      stepper.step(u, s.dt, provisional);
      if (policy.mode == ConservationMode::none) {
        std::swap(u, provisional);
      } else {
        RelaxOutcome out = relax_step(*model, u, provisional, I0, policy);
        gamma = out.gamma;
        sum.root_evaluations += static_cast<std::size_t>(out.iterations);
        sum.max_root_evaluations =
            std::max(sum.max_root_evaluations, static_cast<std::size_t>(out.iterations));
        if (out.degenerate) ++sum.degenerate_steps;
        u = std::move(out.state);
      }
    } catch (const NumericalError& e) {
      std::string path = snapshot_path(opts, s.name, i - 1);
      try {
        write_state_snapshot(u, t, path);
      } catch (const std::exception&) {
        path.clear();
      }
      throw IntegrationFailure(i, path, e.what());
    }
    t += gamma * s.dt;
    const InvariantTriple inv = model->invariants(u);
    if (!std::isfinite(inv.mass) || !std::isfinite(inv.energy)) {
      throw IntegrationFailure(i, "", "solution is no longer finite; try a smaller time step");
    }
    const ScenarioRow r = make_row(t, inv, gamma, kNaN);
    sum.max_mass_drift = std::max(sum.max_mass_drift, r.mass_rel_drift);
    sum.max_momentum_drift = std::max(sum.max_momentum_drift, r.momentum_rel_drift);
    sum.max_energy_drift = std::max(sum.max_energy_drift, r.energy_rel_drift);
    sum.max_gamma_deviation = std::max(sum.max_gamma_deviation, std::abs(gamma - 1.0));
    if (i % s.output_every == 0 || i == steps) {
      res.rows.push_back(r);
      res.rows.back().l2_error = error_at(t, u);
    }
    if (observer) observer(i, t, u);
  }
  sum.steps = steps;
  sum.final_error = res.rows.back().l2_error;
  sum.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const double fit_to = s.fit_to > 0.0 ? s.fit_to : std::numeric_limits<double>::infinity();
  std::vector<double> xs, ys;
  for (const auto& row : res.rows) {
    const double el = row.t - s.t0;
    if (el >= s.fit_from && el <= fit_to) {
      xs.push_back(el);
      ys.push_back(row.l2_error);
    }
  }
  sum.error_slope = loglog_slope(xs, ys);
  res.final_state = std::move(u);
  res.final_time = t;
  return res;
}

}  // namespace fgr
