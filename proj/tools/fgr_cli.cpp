// fgr: run scenarios, benchmarks and studies from the command line.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fgr/errors.hpp"
#include "fgr/experiments/output.hpp"
#include "fgr/experiments/runner.hpp"
#include "fgr/experiments/studies.hpp"

namespace {

using namespace fgr;

int solve(const std::string& name, const std::optional<std::string>& equation,
          RunOptions opts, const std::string& out_dir, const std::string& format) {
  Scenario s = find_scenario(name);
  if (equation) {
    const Equation eq = equation_from_string(*equation);
    const bool nls_family = (eq == Equation::nls || eq == Equation::hypnls) &&
                            (s.equation == Equation::nls || s.equation == Equation::hypnls);
    if (eq != s.equation && !nls_family) {
      throw ContractViolation("scenario " + name + " is a " + to_string(s.equation) +
                              " scenario; --equation " + *equation + " does not apply");
    }
    s.equation = eq;
  }
  const ScenarioResult r = run_scenario(s, opts);
  const std::string path = write_result(r, out_dir, format);
  const auto& m = r.summary;
  std::printf("%s: %zu steps, t=%.6g, wall %.3fs\n", r.scenario.name.c_str(), m.steps,
              r.final_time, m.wall_seconds);
  std::printf("  max drift  mass %.3e  momentum %.3e  energy %.3e\n", m.max_mass_drift,
              m.max_momentum_drift, m.max_energy_drift);
  if (r.scenario.reference != ReferenceKind::none) {
    std::printf("  final L2 error %.3e  error slope %.3f\n", m.final_error, m.error_slope);
  }
  if (r.policy.mode != ConservationMode::none) {
    std::printf("  max |gamma-1| %.3e  root evaluations %zu (max %zu per step)\n",
                m.max_gamma_deviation, m.root_evaluations, m.max_root_evaluations);
  }
  std::printf("  wrote %s\n", path.c_str());
  return 0;
}

int list_scenarios() {
  for (const auto& s : scenario_registry()) {
    std::printf("%-18s %-7s N=%-5zu dt=%-9g t=[%g, %g|%g] %-12s %s\n", s.name.c_str(),
                to_string(s.equation).c_str(), s.n_nodes, s.dt, s.t0, s.t_final_ci,
                s.t_final_full, to_string(s.conservation).c_str(), s.description.c_str());
  }
  return 0;
}

std::vector<ConservationMode> parse_modes(const std::vector<std::string>& names) {
  std::vector<ConservationMode> out;
  for (const auto& n : names) out.push_back(conservation_mode_from_string(n));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier Galerkin / ARK solvers with invariant-conserving relaxation"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "run one scenario and write CSV + JSON");
  std::string scenario;
  std::optional<std::string> equation, tableau, conserve;
  std::optional<std::size_t> n_nodes;
  std::optional<double> dt, t_final, beta, tau;
  std::string out_dir = ".", format = "csv", tier = "ci", snapshot_dir;
  solve_cmd->add_option("--scenario", scenario, "scenario name (see list-scenarios)")->required();
  solve_cmd->add_option("--equation", equation, "bbm|kdv|nls|hypnls (nls and hypnls are interchangeable)");
  solve_cmd->add_option("--n", n_nodes, "number of nodes");
  solve_cmd->add_option("--dt", dt, "time step");
  solve_cmd->add_option("--t-final", t_final, "final time");
  solve_cmd->add_option("--tableau", tableau, "ark4|ark5|ark437|ark5-2003|rk4 or a coefficient file");
  solve_cmd->add_option("--conserve", conserve, "none|mass-energy|full");
  solve_cmd->add_option("--beta", beta, "NLS nonlinearity coefficient");
  solve_cmd->add_option("--tau", tau, "hyperbolization relaxation parameter");
  solve_cmd->add_option("--out", out_dir, "output directory");
  solve_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  solve_cmd->add_option("--tier", tier, "ci|full time span")->check(CLI::IsMember({"ci", "full"}));
  solve_cmd->add_option("--snapshot-dir", snapshot_dir, "where to write the state on failure");

  auto* list_cmd = app.add_subcommand("list-scenarios", "list registered scenarios");

  auto* bench_cmd = app.add_subcommand("bench", "time a performance case");
  std::string bench_case;
  int repeats = 3;
  bench_cmd->add_option("--case", bench_case, "bbm-s5|nls-s5")
      ->required()
      ->check(CLI::IsMember({"bbm-s5", "nls-s5"}));
  bench_cmd->add_option("--repeats", repeats, "timed repeats after one warmup")
      ->check(CLI::PositiveNumber);

  auto* study_cmd = app.add_subcommand("study", "error growth, convergence or hyperbolization study");
  std::string kind, study_scenario, study_tier = "ci";
  int levels = 4;
  std::vector<std::string> modes{"none", "mass-energy", "full"};
  std::vector<double> taus{1e-9};
  study_cmd->add_option("--kind", kind, "error-growth|order|hyperbolization")
      ->required()
      ->check(CLI::IsMember({"error-growth", "order", "hyperbolization"}));
  study_cmd->add_option("--scenario", study_scenario, "scenario name");
  study_cmd->add_option("--tier", study_tier, "ci|full")->check(CLI::IsMember({"ci", "full"}));
  study_cmd->add_option("--levels", levels, "dt halvings for --kind order")->check(CLI::Range(2, 12));
  study_cmd->add_option("--modes", modes, "conservation modes for --kind error-growth");
  study_cmd->add_option("--tau", taus, "tau values for --kind hyperbolization");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed()) {
      RunOptions opts;
      opts.tier = tier_from_string(tier);
      opts.n_nodes = n_nodes;
      opts.dt = dt;
      opts.t_final = t_final;
      opts.tableau = tableau;
      if (conserve) opts.conservation = conservation_mode_from_string(*conserve);
      opts.beta = beta;
      opts.tau = tau;
      opts.snapshot_dir = snapshot_dir;
      return solve(scenario, equation, opts, out_dir, format);
    }
    if (list_cmd->parsed()) return list_scenarios();
    if (bench_cmd->parsed()) {
      std::cout << to_json(perf_bench(bench_case, repeats)) << '\n';
      return 0;
    }
    if (study_cmd->parsed()) {
      RunOptions opts;
      opts.tier = tier_from_string(study_tier);
      if (kind == "hyperbolization") {
        const std::string name = study_scenario.empty() ? "fig7-hypnls" : study_scenario;
        std::cout << to_json(hyperbolization_study(taus, opts, name)) << '\n';
        return 0;
      }
      if (study_scenario.empty()) throw ContractViolation("--scenario is required for --kind " + kind);
      const Scenario& s = find_scenario(study_scenario);
      if (kind == "order") {
        ConvergenceOptions c;
        c.levels = levels;
        std::cout << to_json(convergence_study(s, c, opts)) << '\n';
      } else {
        std::cout << to_json(error_growth_study(s, parse_modes(modes), opts)) << '\n';
      }
      return 0;
    }
  } catch (const ContractViolation& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
