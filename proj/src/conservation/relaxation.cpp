#include <cmath>
#include <limits>

#include "fgr/conservation/relaxation.hpp"
#include "fgr/conservation/root_solve.hpp"
#include "fgr/errors.hpp"

namespace fgr {

RelaxOutcome relax_step(const EquationModel& model, const State& u_n,
                        const State& provisional, const InvariantTriple& targets,
                        const ConservationPolicy& policy) {
  if (policy.mode == ConservationMode::none) {
    throw ContractViolation("relax_step: conservation mode is none");
  }
  const State u_hat = apply_projection(model, policy.mode, provisional, targets, policy);
  State dir = u_hat;
  dir -= u_n;
  if (inner_product(dir, dir) == 0.0) {
    // nothing moved: every gamma gives the same state
    RelaxOutcome same;
    same.state = u_hat;
    same.degenerate = true;
    same.residual = std::abs(model.energy(u_hat) - targets.energy);
    return same;
  }

  const double e_target = targets.energy;
  const double scale = std::max(std::abs(e_target), std::numeric_limits<double>::min());
  const double tol = policy.gamma_tolerance * scale;

  // Keep the projected state belonging to the best residual so the accepted
  // state is not recomputed.
  RelaxOutcome out;
  double best = std::numeric_limits<double>::infinity();
  State trial;
  auto g = [&](double gamma) {
    trial = u_n;
    trial.axpy(gamma, dir);
    State p;
    try {
      p = apply_projection(model, policy.mode, trial, targets, policy);
    } catch (const NumericalError&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    const double r = model.energy(p) - e_target;
    if (std::abs(r) < best) {
      best = std::abs(r);
      out.state = std::move(p);
      out.gamma = gamma;
    }
    return r;
  };

  RootOptions opts;
  opts.guess = 1.0;
  opts.lo = 1.0 - policy.bracket_halfwidth;
  opts.hi = 1.0 + policy.bracket_halfwidth;
  opts.max_expansions = policy.bracket_expansions;
  opts.lower_limit = 0.0;
  opts.abs_tol = tol;
  opts.max_iterations = policy.max_iterations;
  try {
    const RootResult root = scalar_root_solve(g, opts);
    out.iterations = root.evaluations;
    out.bracketed = root.bracketed;
  } catch (const NoRootError& e) {
    // A residual that is flat in the whole bracket means u_n is (numerically)
    // a steady state; keep gamma = 1.
    const double g_lo = std::abs(g(opts.lo));
    const double g_hi = std::abs(g(opts.hi));
    if (std::isfinite(g_lo) && std::isfinite(g_hi) && std::max(g_lo, g_hi) <= 100.0 * tol) {
      out.state = u_hat;
      out.gamma = 1.0;
      out.degenerate = true;
      out.residual = std::abs(model.energy(u_hat) - e_target);
      return out;
    }
    throw RelaxationFailure(std::string("energy relaxation failed: ") + e.what() +
                            "; try a smaller time step");
  }
  if (out.state.size() == 0) {
    throw RelaxationFailure("energy relaxation: residual not finite anywhere; try a smaller time step");
  }
  out.residual = best;
  return out;
}

}  // namespace fgr
