#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fgr/models/model.hpp"

namespace fgr {

/// Closed-form solution u(t, x). Real equations use the real part only.
using ClosedForm = std::function<std::complex<double>(double t, double x)>;

/// BBM solitary wave 1 + A sech^2(k (x - x0 - c t)), A = 3(c - 1),
/// k = sqrt(1 - 1/c) / 2.
struct BbmSolitary {
  double x0 = 0.0;
  double c = 1.2;
  /// If positive, the wave is evaluated in the periodic window of this
  /// length centred on its crest (long runs on a periodic domain).
  double period = 0.0;

  double amplitude() const { return 3.0 * (c - 1.0); }
  double width() const;
  double operator()(double t, double x) const;
};

/// Hirota N-soliton of u_t + u u_x + u_xxx = 0:
///   u = 12 (log F)_xx,  F = sum over subsets S of prod_{i<j in S} a_ij
///   exp(sum_{i in S} eta_i),  eta_i = k_i (x - x_i0) - k_i^3 t.
/// (log F)_xx is the variance of sum_{i in S} k_i under the weights of F's
/// terms, evaluated with a log-sum-exp shift so nothing overflows.
struct KdvMultiSoliton {
  std::vector<double> k;
  std::vector<double> x0;
  /// Interaction coefficients; empty means ((k_i - k_j)/(k_i + k_j))^2.
  std::vector<std::vector<double>> a;

  double interaction(std::size_t i, std::size_t j) const;
  double operator()(double t, double x) const;
};

/// Bright soliton of i u_t + u_xx + beta |u|^2 u = 0 (beta > 0):
///   a sqrt(2/beta) sech(a (x - x0 - 2 xi t)) exp(i (xi x + (a^2 - xi^2) t + phase)).
/// a = 1, xi = -2, beta = 2 gives sech(x + 4t) exp(-i (2x + 3t)).
struct NlsBrightSoliton {
  double a = 1.0;
  double xi = 0.0;
  double x0 = 0.0;
  double phase = 0.0;
  double beta = 2.0;

  std::complex<double> operator()(double t, double x) const;
};

/// Moving gray soliton of the defocusing equation (beta = -1) with background
/// density b0, minimal density b1 and speed c. The formula is evaluated in
/// the periodic window of length `period` centred on the soliton.
struct NlsGraySoliton {
  static constexpr double kHalfWidth = 31.970600318475647;
  double b0 = 1.5;
  double b1 = 1.0;
  double c = 2.0 * 1.4142135623730951;
  double period = 2.0 * kHalfWidth;

  double kappa() const;
  double omega() const;
  std::complex<double> operator()(double t, double x) const;
};

/// Two colliding gray solitons (collision at t = 0) in a frame moving with
/// carrier wavenumber k; beta = -1. Periodic window as for NlsGraySoliton.
struct NlsTwoGraySoliton {
  static constexpr double kHalfWidth = 409.97784129346803;
  double a1 = 1.0;
  double a3 = 1.5;
  double k = 2.0;
  double period = 2.0 * kHalfWidth;

  std::complex<double> operator()(double t, double x) const;
};

/// Superposition of closed forms (used for multi-soliton-like NLS data).
ClosedForm superpose(std::vector<ClosedForm> parts);

/// Samples a closed form at the grid nodes at time t and returns the model
/// state: u for BBM/KdV, (Re u, Im u) for NLS, and for the hyperbolized model
/// additionally nu = v_x, omega = w_x.
State sample_state(Equation eq, const GridPtr& grid, const ClosedForm& u, double t);

/// Nodal values of the primary components (u, or v and w) at the n grid
/// nodes.
std::vector<std::vector<double>> sample_nodal(Equation eq, const SpectralGrid& grid,
                                              const ClosedForm& u, double t);

/// sqrt(dx sum_i sum_c (num_c(x_i) - ref_c[i])^2) over the components in ref.
double nodal_l2_error(const State& num, const std::vector<std::vector<double>>& ref);

}  // namespace fgr
