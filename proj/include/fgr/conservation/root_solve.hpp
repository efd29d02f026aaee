#pragma once

#include <functional>
#include <limits>

namespace fgr {

struct RootOptions {
  double guess = 1.0;
  /// Initial bracket; must contain the guess.
  double lo = 0.5;
  double hi = 1.5;
  /// Each expansion doubles the bracket half-widths around the guess.
  int max_expansions = 3;
  /// Expansions never reach this value; the lower end moves halfway towards
  /// it instead (relaxation keeps gamma > 0, where g(0) = 0 trivially).
  double lower_limit = -std::numeric_limits<double>::infinity();
  /// Accept x once |g(x)| <= abs_tol.
  double abs_tol = 1e-13;
  int max_iterations = 100;
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  // |g(root)|
  int evaluations = 0;
  bool bracketed = false;  // the secant phase failed and bracketing was used
};

/// Root of g near opts.guess: secant iteration from the guess, falling back to
/// Illinois regula falsi with bisection safeguards inside a sign-changing
/// bracket. The best iterate seen is returned if the tolerance cannot be met
/// (e.g. when roundoff in g dominates). Throws NoRootError if no sign change
/// is found after the allowed expansions.
RootResult scalar_root_solve(const std::function<double(double)>& g,
                             const RootOptions& opts = {});

}  // namespace fgr
