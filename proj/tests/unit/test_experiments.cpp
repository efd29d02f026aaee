#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "fgr/errors.hpp"
#include "fgr/experiments/output.hpp"
#include "fgr/experiments/runner.hpp"
#include "fgr/experiments/scenario.hpp"
#include "fgr/experiments/studies.hpp"

using namespace fgr;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& tag) {
  const fs::path d = fs::temp_directory_path() / ("fgr-test-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

RunOptions short_run(double t_final) {
  RunOptions o;
  o.t_final = t_final;
  return o;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FGR_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Registry, NamesAreUniqueAndValid) {
  std::set<std::string> seen;
  for (const auto& s : scenario_registry()) {
    EXPECT_TRUE(seen.insert(s.name).second) << s.name;
    EXPECT_NO_THROW(s.validate()) << s.name;
    EXPECT_EQ(find_scenario(s.name).name, s.name);
  }
  EXPECT_EQ(seen.size(), scenario_names().size());
  for (const char* n : {"fig1-bbm", "fig2-kdv", "gray2", "s5-bbm", "s5-nls", "fig7-hypnls",
                        "order-kdv"}) {
    EXPECT_TRUE(seen.count(n)) << n;
  }
}

TEST(Registry, UnknownNameThrows) {
  EXPECT_THROW(find_scenario("no-such-scenario"), ContractViolation);
}

TEST(Registry, ValidateRejectsInconsistentFields) {
  Scenario s = find_scenario("fig2-bbm");
  s.xmax = s.xmin;
  EXPECT_THROW(s.validate(), ContractViolation);
  s = find_scenario("fig2-bbm");
  s.dt = -1.0;
  EXPECT_THROW(s.validate(), ContractViolation);
}

TEST(Registry, ScenarioFacts) {
  const auto& b = find_scenario("fig2-bbm");
  EXPECT_EQ(b.equation, Equation::bbm);
  EXPECT_DOUBLE_EQ(b.xmin, -100.0);
  EXPECT_DOUBLE_EQ(b.xmax, 100.0);
  EXPECT_EQ(b.n_nodes, 256u);
  EXPECT_DOUBLE_EQ(b.dt, 0.5);
  EXPECT_EQ(find_scenario("s5-bbm").conservation, ConservationMode::mass_energy);
  EXPECT_DOUBLE_EQ(find_scenario("s5-nls").params.beta, 2.0);
  EXPECT_EQ(find_scenario("fig7-hypnls").equation, Equation::hypnls);
}

TEST(Runner, ResolveAppliesOverrides) {
  RunOptions o;
  o.n_nodes = 64;
  o.dt = 0.25;
  o.t_final = 3.0;
  o.tableau = "ark4";
  o.conservation = ConservationMode::mass_momentum_energy;
  o.beta = 3.0;
  o.output_every = 2;
  const Scenario r = resolve_scenario(find_scenario("fig2-nls"), o);
  EXPECT_EQ(r.n_nodes, 64u);
  EXPECT_DOUBLE_EQ(r.dt, 0.25);
  EXPECT_DOUBLE_EQ(r.t_final(Tier::ci), 3.0);
  EXPECT_EQ(r.tableau, "ark4");
  EXPECT_EQ(r.conservation, ConservationMode::mass_momentum_energy);
  EXPECT_DOUBLE_EQ(r.params.beta, 3.0);
  EXPECT_EQ(r.output_every, 2u);
  EXPECT_EQ(r.steps(Tier::ci), 12u);

  RunOptions bad;
  bad.n_nodes = 1;
  EXPECT_THROW(resolve_scenario(find_scenario("fig2-nls"), bad), ContractViolation);
}

TEST(Runner, LoglogSlope) {
  std::vector<double> x, y;
  for (double v : {1.0, 2.0, 4.0, 8.0}) {
    x.push_back(v);
    y.push_back(3.0 * v * v);
  }
  EXPECT_NEAR(loglog_slope(x, y), 2.0, 1e-13);
  // non-positive points are skipped
  x.push_back(0.0);
  y.push_back(1.0);
  EXPECT_NEAR(loglog_slope(x, y), 2.0, 1e-13);
  EXPECT_TRUE(std::isnan(loglog_slope({1.0, 2.0}, {1.0, 2.0})));
}

TEST(Runner, RelativeDrift) {
  EXPECT_DOUBLE_EQ(relative_drift(1.5, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(relative_drift(-1.5, -1.0), 0.5);
  EXPECT_DOUBLE_EQ(relative_drift(0.25, 0.0), 0.25);
}

TEST(Runner, RowsAndRelaxedTimes) {
  RunOptions o = short_run(5.0);
  o.conservation = ConservationMode::mass_momentum_energy;
  const auto r = run_scenario(find_scenario("fig2-kdv"), o);
  EXPECT_EQ(r.summary.steps, 50u);
  ASSERT_GE(r.rows.size(), 2u);
  EXPECT_DOUBLE_EQ(r.rows.front().t, 0.0);
  EXPECT_NEAR(r.rows.back().t, r.final_time, 0.0);
  EXPECT_NEAR(r.final_time, 5.0, 1e-3);
  EXPECT_LT(r.summary.max_mass_drift, 1e-12);
  EXPECT_LT(r.summary.max_momentum_drift, 1e-12);
  EXPECT_LT(r.summary.max_energy_drift, 1e-12);
}

TEST(Runner, NoReferenceGivesNaNError) {
  const auto r = run_scenario(find_scenario("fig1-kdv"), short_run(0.5));
  EXPECT_EQ(r.scenario.reference, ReferenceKind::none);
  EXPECT_TRUE(std::isnan(r.summary.final_error));
  std::ostringstream csv;
  write_csv(r, csv);
  // empty l2_error field
  EXPECT_NE(csv.str().find(",,"), std::string::npos);
}

TEST(Output, CsvIsDeterministic) {
  RunOptions o = short_run(10.0);
  o.conservation = ConservationMode::mass_momentum_energy;
  std::ostringstream a, b;
  write_csv(run_scenario(find_scenario("fig2-bbm"), o), a);
  write_csv(run_scenario(find_scenario("fig2-bbm"), o), b);
  EXPECT_EQ(a.str(), b.str());
  std::istringstream in(a.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, kCsvHeader);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5) << line;
  }
  EXPECT_EQ(rows, 21u);
}

TEST(Output, JsonSidecar) {
  const auto r = run_scenario(find_scenario("fig2-nls"), short_run(0.1));
  const auto j = nlohmann::json::parse(result_json(r, true));
  EXPECT_EQ(j["scenario"]["name"], "fig2-nls");
  EXPECT_EQ(j["scenario"]["hash"], scenario_hash(r.scenario));
  EXPECT_EQ(j["scenario"]["tableau"], "ark5");
  EXPECT_EQ(j["columns"], kCsvHeader);
  EXPECT_EQ(j["summary"]["steps"], 10);
  EXPECT_EQ(j["rows"].size(), r.rows.size());
  EXPECT_TRUE(j["policy"].contains("mode"));
  EXPECT_TRUE(j["summary"].contains("wall_seconds"));
  EXPECT_FALSE(nlohmann::json::parse(result_json(r)).contains("rows"));
}

TEST(Output, ScenarioHashTracksParameters) {
  Scenario s = find_scenario("fig2-kdv");
  const std::string h = scenario_hash(s);
  EXPECT_EQ(h, scenario_hash(find_scenario("fig2-kdv")));
  s.dt *= 0.5;
  EXPECT_NE(h, scenario_hash(s));
  EXPECT_NE(h, scenario_hash(find_scenario("fig2-bbm")));
}

TEST(Output, WriteResultFiles) {
  const auto dir = scratch_dir("write");
  const auto r = run_scenario(find_scenario("fig2-nls"), short_run(0.05));
  const fs::path csv = write_result(r, dir.string(), "csv");
  EXPECT_EQ(csv, dir / "fig2-nls.csv");
  EXPECT_TRUE(fs::exists(dir / "fig2-nls.json"));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path js = write_result(r, dir.string(), "json");
  EXPECT_EQ(js, dir / "fig2-nls.json");
  EXPECT_FALSE(fs::exists(dir / "fig2-nls.csv"));
  std::ifstream in(js);
  EXPECT_TRUE(nlohmann::json::parse(in).contains("rows"));
  EXPECT_THROW(write_result(r, dir.string(), "xml"), ContractViolation);
  fs::remove_all(dir);
}

TEST(Runner, FailureWritesSnapshot) {
  // full relaxation has no root for this wave at this step
  const auto dir = scratch_dir("snap");
  RunOptions o = short_run(5.0);
  o.conservation = ConservationMode::mass_momentum_energy;
  o.snapshot_dir = dir.string();
  try {
    run_scenario(find_scenario("s5-bbm"), o);
    FAIL() << "expected IntegrationFailure";
  } catch (const IntegrationFailure& e) {
    ASSERT_FALSE(e.snapshot().empty());
    std::ifstream in(e.snapshot());
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["n_nodes"], 100);
    EXPECT_EQ(j["components"].size(), 1u);
  }
  fs::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  const auto dir = scratch_dir("cli");
  const std::string out = " --out " + dir.string() + " --snapshot-dir " + dir.string();
  EXPECT_EQ(run_cli("list-scenarios"), 0);
  EXPECT_EQ(run_cli("solve --scenario fig2-nls --t-final 0.02" + out), 0);
  EXPECT_TRUE(fs::exists(dir / "fig2-nls.csv"));
  EXPECT_EQ(run_cli(""), 1);
  EXPECT_EQ(run_cli("solve --scenario no-such" + out), 1);
  EXPECT_EQ(run_cli("solve --scenario fig2-nls --format xml" + out), 1);
  EXPECT_EQ(run_cli("solve --scenario fig2-bbm --equation kdv" + out), 1);
  EXPECT_EQ(run_cli("solve --scenario s5-bbm --conserve full --t-final 5" + out), 2);
  fs::remove_all(dir);
}

TEST(Studies, BenchRejectsUnknownCase) {
  EXPECT_THROW(perf_bench("nope"), ContractViolation);
  const auto cases = bench_cases();
  EXPECT_EQ(cases.size(), 2u);
}

TEST(Studies, ErrorGrowthRunsEachMode) {
  Scenario s = find_scenario("fig2-kdv");
  const auto st = error_growth_study(
      s, {ConservationMode::none, ConservationMode::mass_momentum_energy}, short_run(4.0));
  ASSERT_EQ(st.size(), 2u);
  EXPECT_EQ(st[0].mode, ConservationMode::none);
  EXPECT_GT(st[0].summary.max_energy_drift, st[1].summary.max_energy_drift);
  EXPECT_FALSE(nlohmann::json::parse(to_json(st)).empty());
}
