#pragma once

#include <vector>

#include "fgr/models/model.hpp"
#include "fgr/time/tableau.hpp"

namespace fgr {

struct StepRecord {
  double t_before = 0.0;
  double dt_nominal = 0.0;
  double t_after = 0.0;
  double gamma = 1.0;
  bool rejected = false;
};

/// Fixed-step additive Runge-Kutta stepper. Stage tangents are kept between
/// calls so a step allocates nothing once the buffers exist.
class ArkStepper {
 public:
  ArkStepper(const EquationModel& model, ArkTableau tableau);

  /// IMEX step: F_E with the explicit matrix, F_I with the implicit one and a
  /// per-mode solve for every nonzero diagonal entry. Falls back to
  /// explicit_step when the model or the tableau has no implicit part.
  void step(const State& u, double dt, State& out);
  State step(const State& u, double dt);

  /// Explicit method applied to the unsplit right-hand side F_E + F_I.
  void explicit_step(const State& u, double dt, State& out);
  State explicit_step(const State& u, double dt);

  const ArkTableau& tableau() const { return tab_; }
  const EquationModel& model() const { return model_; }

 private:
  void ensure_buffers();

  const EquationModel& model_;
  ArkTableau tab_;
  bool implicit_;
  std::vector<State> ke_;
  std::vector<State> ki_;
  State stage_;
  State solved_;
  State scratch_;
};

}  // namespace fgr
