#pragma once

#include <iosfwd>
#include <string>

#include "fgr/experiments/runner.hpp"

namespace fgr {

/// Column header of the time-series CSV.
inline constexpr const char* kCsvHeader =
    "t,mass_rel_drift,momentum_rel_drift,energy_rel_drift,l2_error,gamma";

/// Rows in the CSV schema above; l2_error is empty when there is no
/// reference. Values use 17 significant digits so reruns compare bitwise.
void write_csv(const ScenarioResult& r, std::ostream& out);

/// Run metadata and the summary as a JSON document (the CSV sidecar):
/// scenario fields, scenario hash, tableau, policy, tolerances, wall time.
/// With include_rows the time series is embedded as well.
std::string result_json(const ScenarioResult& r, bool include_rows = false);

/// FNV-1a hash (hex) of the resolved scenario parameters.
std::string scenario_hash(const Scenario& s);

/// Writes <dir>/<name>.csv and <dir>/<name>.json (format "csv"), or only
/// <dir>/<name>.json with rows embedded (format "json"). Returns the path of
/// the main file.
std::string write_result(const ScenarioResult& r, const std::string& dir,
                         const std::string& format = "csv");

/// Modal coefficients of every component as JSON, for post-mortem analysis.
void write_state_snapshot(const State& s, double t, const std::string& path);

}  // namespace fgr
