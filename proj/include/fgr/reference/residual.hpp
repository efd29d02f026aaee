#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fgr/models/model.hpp"
#include "fgr/reference/solitons.hpp"
#include "fgr/time/ark.hpp"

namespace fgr {

struct ResidualOptions {
  std::size_t resolution = 4096;
  /// Step of the eighth-order central difference for u_t; 0 picks 0.05 for
  /// BBM and 1e-3 otherwise.
  double time_step = 0.0;
};

/// Max-norm residual of the continuous PDE for a closed form at time t on
/// [xmin, xmax): u_t by finite differences in time, x-derivatives spectrally
/// on `resolution` nodes. BBM: u_t + u u_x - u_txx; KdV: u_t + u u_x +
/// u_xxx; NLS: i u_t + u_xx + beta |u|^2 u.
double residual_oracle(Equation eq, double beta, const ClosedForm& u, double t,
                       double xmin, double xmax, const ResidualOptions& opts = {});

/// High-resolution baseline trajectory used as the error reference where no
/// closed form exists. It integrates with the given tableau, no relaxation,
/// on n_fine nodes with step dt_fine, and can be queried at any later time
/// (the last step is shortened to land exactly on it).
class FineReference {
 public:
  FineReference(Equation eq, const ModelParams& params, double xmin, double xmax,
                std::size_t n_fine, double dt_fine, const ClosedForm& initial,
                double t0 = 0.0, const std::string& tableau = "ark5");

  /// Nodal values of the primary components at the n_coarse nodes; n_fine
  /// must be a multiple of n_coarse. Times must be non-decreasing.
  std::vector<std::vector<double>> nodal_at(double t, std::size_t n_coarse);
  /// Full fine state at time t.
  State state_at(double t);

  double time() const { return t_; }
  const EquationModel& model() const { return *model_; }
  std::size_t steps_taken() const { return steps_; }

  /// n_fine = 4 n, dt_fine = dt / 100.
  static std::size_t default_nodes(std::size_t n) { return 4 * n; }
  static double default_step(double dt) { return dt / 100.0; }

 private:
  void advance_to(double t);

  std::unique_ptr<EquationModel> model_;
  std::unique_ptr<ArkStepper> stepper_;
  State u_;
  State next_;
  double t0_ = 0.0;
  double t_;
  double dt_;
  std::size_t steps_ = 0;
};

}  // namespace fgr
