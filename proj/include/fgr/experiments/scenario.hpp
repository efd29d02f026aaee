#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fgr/conservation/relaxation.hpp"
#include "fgr/models/model.hpp"
#include "fgr/reference/solitons.hpp"

namespace fgr {

enum class Tier { ci, full };
std::string to_string(Tier t);
Tier tier_from_string(const std::string& s);

enum class ReferenceKind { none, closed_form, fine_reference };
std::string to_string(ReferenceKind r);

struct Scenario {
  std::string name;
  std::string description;
  Equation equation = Equation::kdv;
  double xmin = -1.0;
  double xmax = 1.0;
  std::size_t n_nodes = 32;
  double dt = 1e-2;
  double t0 = 0.0;
  double t_final_ci = 1.0;
  double t_final_full = 1.0;
  std::string tableau = "ark5";
  ConservationMode conservation = ConservationMode::none;
  ModelParams params;
  /// Initial data at t0. With ReferenceKind::closed_form it is also the exact
  /// solution the error is measured against.
  ClosedForm initial;
  std::string initial_label;
  ReferenceKind reference = ReferenceKind::none;
  /// Output row every this many steps.
  std::size_t output_every = 1;
  /// Error-growth fit window, in elapsed time t - t0; fit_to <= 0 means the
  /// end of the run.
  double fit_from = 0.0;
  double fit_to = 0.0;

  double t_final(Tier tier) const { return tier == Tier::ci ? t_final_ci : t_final_full; }
  /// Fixed number of steps of size dt covering [t0, t_final].
  std::size_t steps(Tier tier) const;
  /// Throws ContractViolation if fields are inconsistent.
  void validate() const;
};

/// All registered scenarios, in a stable order.
const std::vector<Scenario>& scenario_registry();
std::vector<std::string> scenario_names();
/// Throws ContractViolation for unknown names.
const Scenario& find_scenario(const std::string& name);

// Initial data shared by several scenarios.
ClosedForm bbm_two_wave();
ClosedForm kdv_two_soliton();
ClosedForm kdv_three_soliton();
/// Superposed bright solitons for the focusing equation with the given beta;
/// not an exact solution, used with a fine reference.
ClosedForm nls_two_soliton_like(double beta);
ClosedForm nls_three_soliton_like(double beta);
/// sech(x + 4t) exp(-i (2x + 3t)), exact for beta = 2.
ClosedForm nls_benchmark_soliton();

}  // namespace fgr
