#include "fgr/experiments/output.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "fgr/errors.hpp"

namespace fgr {

namespace {

using nlohmann::json;

// JSON has no NaN; missing values become null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

}  // namespace

void write_csv(const ScenarioResult& r, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& row : r.rows) {
    out << fmt(row.t) << ',' << fmt(row.mass_rel_drift) << ',' << fmt(row.momentum_rel_drift)
        << ',' << fmt(row.energy_rel_drift) << ',';
    if (std::isfinite(row.l2_error)) out << fmt(row.l2_error);
    out << ',' << fmt(row.gamma) << '\n';
  }
}

std::string scenario_hash(const Scenario& s) {
  std::ostringstream key;
  key << std::setprecision(17) << s.name << '|' << to_string(s.equation) << '|' << s.xmin << '|'
      << s.xmax << '|' << s.n_nodes << '|' << s.dt << '|' << s.t0 << '|' << s.t_final_ci << '|'
      << s.t_final_full << '|' << s.tableau << '|' << to_string(s.conservation) << '|'
      << s.params.beta << '|' << s.params.tau << '|' << s.params.collocation << '|'
      << s.initial_label << '|' << to_string(s.reference) << '|' << s.output_every;
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : key.str()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string result_json(const ScenarioResult& r, bool include_rows) {
  const Scenario& s = r.scenario;
  json j;
  j["scenario"] = {
      {"name", s.name},
      {"description", s.description},
      {"hash", scenario_hash(s)},
      {"equation", to_string(s.equation)},
      {"domain", {s.xmin, s.xmax}},
      {"n_nodes", s.n_nodes},
      {"dt", s.dt},
      {"t0", s.t0},
      {"t_final", s.t_final(r.tier)},
      {"tier", to_string(r.tier)},
      {"tableau", s.tableau},
      {"beta", s.params.beta},
      {"tau", s.params.tau},
      {"collocation", s.params.collocation},
      {"initial_data", s.initial_label},
      {"reference", to_string(s.reference)},
      {"output_every", s.output_every},
  };
  j["policy"] = {
      {"mode", to_string(r.policy.mode)},
      {"gamma_tolerance", r.policy.gamma_tolerance},
      {"bracket_halfwidth", r.policy.bracket_halfwidth},
      {"bracket_expansions", r.policy.bracket_expansions},
      {"max_iterations", r.policy.max_iterations},
      {"newton_tolerance", r.policy.newton_tolerance},
      {"newton_max_iterations", r.policy.newton_max_iterations},
  };
  j["initial_invariants"] = {
      {"mass", r.initial.mass}, {"momentum", r.initial.momentum}, {"energy", r.initial.energy}};
  const auto& m = r.summary;
  j["summary"] = {
      {"steps", m.steps},
      {"final_time", r.final_time},
      {"max_mass_drift", m.max_mass_drift},
      {"max_momentum_drift", m.max_momentum_drift},
      {"max_energy_drift", m.max_energy_drift},
      {"final_error", num(m.final_error)},
      {"error_slope", num(m.error_slope)},
      {"max_gamma_deviation", m.max_gamma_deviation},
      {"root_evaluations", m.root_evaluations},
      {"max_root_evaluations", m.max_root_evaluations},
      {"degenerate_steps", m.degenerate_steps},
      {"wall_seconds", m.wall_seconds},
  };
  j["columns"] = kCsvHeader;
  if (include_rows) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back({row.t, row.mass_rel_drift, row.momentum_rel_drift, row.energy_rel_drift,
                      num(row.l2_error), row.gamma});
    }
    j["rows"] = std::move(rows);
  }
  return j.dump(2);
}

std::string write_result(const ScenarioResult& r, const std::string& dir,
                         const std::string& format) {
  if (format != "csv" && format != "json") {
    throw ContractViolation("unknown output format '" + format + "' (expected csv or json)");
  }
  std::filesystem::create_directories(dir);
  const std::filesystem::path base = std::filesystem::path(dir) / r.scenario.name;
  const std::string json_path = base.string() + ".json";
  if (format == "json") {
    open_out(json_path) << result_json(r, true) << '\n';
    return json_path;
  }
  const std::string csv_path = base.string() + ".csv";
  auto csv = open_out(csv_path);
  write_csv(r, csv);
  open_out(json_path) << result_json(r, false) << '\n';
  return csv_path;
}

void write_state_snapshot(const State& s, double t, const std::string& path) {
  json j;
  j["t"] = t;
  j["domain"] = {s.grid().xmin(), s.grid().xmax()};
  j["n_nodes"] = s.grid().n_nodes();
  json comps = json::array();
  for (const auto& f : s) {
    json re = json::array(), im = json::array();
    for (const auto& c : f.coeffs()) {
      re.push_back(c.real());
      im.push_back(c.imag());
    }
    comps.push_back({{"re", std::move(re)}, {"im", std::move(im)}});
  }
  j["components"] = std::move(comps);
  open_out(path) << j.dump() << '\n';
}

}  // namespace fgr
