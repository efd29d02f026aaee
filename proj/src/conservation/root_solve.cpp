#include "fgr/conservation/root_solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fgr/errors.hpp"

namespace fgr {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Sampler {
  const std::function<double(double)>& g;
  std::vector<std::pair<double, double>> points;
  double best_x = 0.0;
  double best_g = std::numeric_limits<double>::infinity();
  int evaluations = 0;

  double operator()(double x) {
    const double y = g(x);
    ++evaluations;
    if (std::isfinite(y)) {
      points.emplace_back(x, y);
      if (std::abs(y) < best_g) {
        best_g = std::abs(y);
        best_x = x;
      }
    }
    return y;
  }

  RootResult result(bool bracketed) const {
    return {best_x, best_g, evaluations, bracketed};
  }
};

bool stagnated(double a, double b) {
  return std::abs(a - b) <= 4.0 * kEps * std::max(1.0, std::abs(b));
}

}  // namespace

RootResult scalar_root_solve(const std::function<double(double)>& g,
                             const RootOptions& opts) {
  if (!(opts.lower_limit < opts.lo) || !(opts.lo <= opts.guess && opts.guess <= opts.hi) || !(opts.abs_tol >= 0.0)) {
    throw ContractViolation("scalar_root_solve: bracket must contain the guess");
  }
  Sampler f{g, {}};
  const double tol = opts.abs_tol;

  // Secant from the guess.
  double x0 = opts.guess;
  double g0 = f(x0);
  if (std::isfinite(g0) && std::abs(g0) <= tol) return f.result(false);
  const double h = 1e-6 * std::max(1.0, std::abs(x0));
  double x1 = x0 + (x0 + h <= opts.hi ? h : -h);
  double g1 = f(x1);
  for (int it = 0; it < 30 && std::isfinite(g0) && std::isfinite(g1); ++it) {
    if (g1 == g0) break;
    const double x2 = x1 - g1 * (x1 - x0) / (g1 - g0);
    if (!std::isfinite(x2) || x2 < opts.lo || x2 > opts.hi) break;
    if (std::abs(g1) <= tol) {
      // one polishing step; keep whichever residual is smaller
      if (!stagnated(x1, x2)) f(x2);
      return f.result(false);
    }
    if (stagnated(x1, x2)) return f.result(false);
    x0 = x1;
    g0 = g1;
    x1 = x2;
    g1 = f(x2);
  }
  if (f.best_g <= tol) return f.result(false);

  // Bracketing fallback.
  double lo = opts.lo;
  double hi = opts.hi;
  bool found = false;
  double a = 0.0, fa = 0.0, b = 0.0, fb = 0.0;
  for (int e = 0; e <= opts.max_expansions && !found; ++e) {
    if (e > 0) {
      const double wider = opts.guess - 2.0 * (opts.guess - lo);
      lo = wider > opts.lower_limit ? wider : 0.5 * (lo + opts.lower_limit);
      hi = opts.guess + 2.0 * (hi - opts.guess);
    }
    f(lo);
    f(hi);
    auto pts = f.points;
    std::erase_if(pts, [&](const auto& p) { return p.first < lo || p.first > hi; });
    std::sort(pts.begin(), pts.end());
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const auto& [xa, ya] = pts[i];
      const auto& [xb, yb] = pts[i + 1];
      if (ya == 0.0 || yb == 0.0) return f.result(true);
      if ((ya < 0.0) != (yb < 0.0)) {
        const double dist = std::min(std::abs(xa - opts.guess), std::abs(xb - opts.guess));
        if (dist < best_dist) {
          best_dist = dist;
          a = xa, fa = ya, b = xb, fb = yb;
          found = true;
        }
      }
    }
  }
  if (!found) {
    throw NoRootError("no sign change of the residual in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "] (best |g| = " + std::to_string(f.best_g) + ")");
  }

  // Illinois regula falsi, every fourth step a bisection.
  for (int it = 0; it < opts.max_iterations; ++it) {
    double x = b - fb * (b - a) / (fb - fa);
    if (it % 4 == 3 || !(x > std::min(a, b) && x < std::max(a, b))) x = 0.5 * (a + b);
    const double fx = f(x);
    if (!std::isfinite(fx)) break;
    if (std::abs(fx) <= tol) return f.result(true);
    if ((fx < 0.0) != (fb < 0.0)) {
      a = b;
      fa = fb;
    } else {
      fa *= 0.5;
    }
    b = x;
    fb = fx;
    if (stagnated(a, b)) break;
  }
  return f.result(true);
}

}  // namespace fgr
