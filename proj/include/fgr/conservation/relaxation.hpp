#pragma once

#include <string>

#include "fgr/models/model.hpp"

namespace fgr {

enum class ConservationMode { none, mass_energy, mass_momentum_energy };

std::string to_string(ConservationMode m);
/// Accepts "none", "mass-energy", "full" (and the underscore spellings).
ConservationMode conservation_mode_from_string(const std::string& s);

struct ConservationPolicy {
  ConservationMode mode = ConservationMode::none;
  /// Relative tolerance on the energy residual of the gamma equation.
  double gamma_tolerance = 1e-13;
  /// Initial gamma bracket [1 - delta, 1 + delta], doubled at most
  /// `bracket_expansions` times.
  double bracket_halfwidth = 0.5;
  int bracket_expansions = 3;
  int max_iterations = 100;
  /// Newton for the two Lagrange multipliers of the NLS projection.
  double newton_tolerance = 1e-13;
  int newton_max_iterations = 25;
};

struct NewtonReport {
  double lambda = 1.0;
  double mu = 0.0;
  int iterations = 0;
  double residual = 0.0;
};

/// Mass and momentum projection for BBM/KdV: shifts the mean to
/// targets.mass / L and rescales the fluctuation so the (model's) quadratic
/// momentum equals targets.momentum. Throws DegenerateProjection when the
/// rescaling radicand is not positive.
State project_bbm_kdv(const EquationModel& model, const State& u,
                      const InvariantTriple& targets);

/// Mass and momentum projection along the momentum gradient,
///   pi(v, w) = lambda (v, w) + mu (w_x, -v_x),
/// with (lambda, mu) from Newton started at (1, 0). For the hyperbolized
/// model the auxiliary pair (nu, omega) is treated the same way with the
/// tau-weighted functionals. Throws ProjectionFailure if Newton does not
/// converge or its Jacobian is singular.
State project_nls(const EquationModel& model, const State& s,
                  const InvariantTriple& targets, const ConservationPolicy& policy = {},
                  NewtonReport* report = nullptr);

/// Scales (v, w) by alpha1 and (nu, omega) by alpha2 so the tau-weighted
/// mass equals c.
State project_hypnls_mass(const State& s, double c, double tau);

/// (v, w) scaled by sqrt(target_mass / M(v, w)).
State scale_nls_mass(const EquationModel& model, const State& s, double target_mass);

/// The inner projection used by `mode` for this model (identity for none,
/// and for mass_energy on BBM/KdV where the mass is linear).
State apply_projection(const EquationModel& model, ConservationMode mode,
                       const State& s, const InvariantTriple& targets,
                       const ConservationPolicy& policy = {});

struct RelaxOutcome {
  State state;
  double gamma = 1.0;
  int iterations = 0;    // residual evaluations of the gamma equation
  double residual = 0.0; // |E(state) - E target|
  bool degenerate = false;
  bool bracketed = false;
};

/// One relaxation step: u_hat = pi(provisional), gamma solving
///   E(pi(u_n + gamma (u_hat - u_n))) = targets.energy,
/// returned state pi(u_n + gamma (u_hat - u_n)). If the residual is flat
/// around gamma = 1 (u_n a steady state) gamma = 1 is returned with
/// degenerate set. Throws RelaxationFailure if no root is found.
RelaxOutcome relax_step(const EquationModel& model, const State& u_n,
                        const State& provisional, const InvariantTriple& targets,
                        const ConservationPolicy& policy);

}  // namespace fgr
