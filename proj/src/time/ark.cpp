#include "fgr/time/ark.hpp"

#include <cmath>

#include "fgr/errors.hpp"

namespace fgr {

ArkStepper::ArkStepper(const EquationModel& model, ArkTableau tableau)
    : model_(model), tab_(std::move(tableau)) {
  const auto diag = validate_tableau(tab_);
  if (!diag.explicit_strictly_lower || !diag.implicit_lower) {
    throw ContractViolation("tableau '" + tab_.name + "' is not lower triangular");
  }
  implicit_ = model_.has_stiff_part() && tab_.has_implicit_part();
}

void ArkStepper::ensure_buffers() {
  if (ke_.size() == static_cast<std::size_t>(tab_.stages)) return;
  ke_.assign(tab_.stages, model_.zero_state());
  ki_.assign(implicit_ ? tab_.stages : 0, model_.zero_state());
  stage_ = model_.zero_state();
  solved_ = model_.zero_state();
  scratch_ = model_.zero_state();
}

void ArkStepper::step(const State& u, double dt, State& out) {
  if (!implicit_) {
    explicit_step(u, dt, out);
    return;
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ContractViolation("ark step: dt must be positive");
  ensure_buffers();
  const int s = tab_.stages;
  for (int i = 0; i < s; ++i) {
    stage_ = u;
    for (int j = 0; j < i; ++j) {
      if (tab_.a_explicit[i][j] != 0.0) stage_.axpy(dt * tab_.a_explicit[i][j], ke_[j]);
      if (tab_.a_implicit[i][j] != 0.0) stage_.axpy(dt * tab_.a_implicit[i][j], ki_[j]);
    }
    const double aii = tab_.a_implicit[i][i];
    const State* y = &stage_;
    if (aii != 0.0) {
      model_.solve_implicit(dt * aii, stage_, solved_);
      y = &solved_;
    }
    model_.explicit_rhs(*y, ke_[i]);
    model_.implicit_rhs(*y, ki_[i]);
  }
  out = u;
  for (int i = 0; i < s; ++i) {
    if (tab_.b[i] == 0.0) continue;
    out.axpy(dt * tab_.b[i], ke_[i]);
    out.axpy(dt * tab_.b[i], ki_[i]);
  }
}

State ArkStepper::step(const State& u, double dt) {
  State out;
  step(u, dt, out);
  return out;
}

void ArkStepper::explicit_step(const State& u, double dt, State& out) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ContractViolation("erk step: dt must be positive");
  ensure_buffers();
  const int s = tab_.stages;
  const bool stiff = model_.has_stiff_part();
  for (int i = 0; i < s; ++i) {
    stage_ = u;
    for (int j = 0; j < i; ++j) {
      if (tab_.a_explicit[i][j] != 0.0) stage_.axpy(dt * tab_.a_explicit[i][j], ke_[j]);
    }
    model_.explicit_rhs(stage_, ke_[i]);
    if (stiff) {
      model_.implicit_rhs(stage_, scratch_);
      ke_[i] += scratch_;
    }
  }
  out = u;
  for (int i = 0; i < s; ++i) {
    if (tab_.b[i] != 0.0) out.axpy(dt * tab_.b[i], ke_[i]);
  }
}

State ArkStepper::explicit_step(const State& u, double dt) {
  State out;
  explicit_step(u, dt, out);
  return out;
}

}  // namespace fgr
