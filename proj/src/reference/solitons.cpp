#include "fgr/reference/solitons.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fgr/errors.hpp"
#include "fgr/spectral/operations.hpp"

namespace fgr {

using Complex = std::complex<double>;

double BbmSolitary::width() const { return 0.5 * std::sqrt(1.0 - 1.0 / c); }

double BbmSolitary::operator()(double t, double x) const {
  double xi = x - x0 - c * t;
  if (period > 0.0) xi -= period * std::round(xi / period);
  const double s = 1.0 / std::cosh(width() * xi);
  return 1.0 + amplitude() * s * s;
}

double KdvMultiSoliton::interaction(std::size_t i, std::size_t j) const {
  if (!a.empty()) return a[i][j];
  const double r = (k[i] - k[j]) / (k[i] + k[j]);
  return r * r;
}

double KdvMultiSoliton::operator()(double t, double x) const {
  const std::size_t n = k.size();
  if (n == 0 || x0.size() != n || n > 20) {
    throw ContractViolation("KdvMultiSoliton: need matching k and x0 (at most 20 solitons)");
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<double> logw(subsets);
  std::vector<double> ksum(subsets);
  std::vector<double> eta(n);
  for (std::size_t i = 0; i < n; ++i) eta[i] = k[i] * (x - x0[i]) - k[i] * k[i] * k[i] * t;
  double mx = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < subsets; ++s) {
    double lw = 0.0;
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(s >> i & 1u)) continue;
      lw += eta[i];
      ks += k[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        if (s >> j & 1u) lw += std::log(interaction(i, j));
      }
    }
    logw[s] = lw;
    ksum[s] = ks;
    mx = std::max(mx, lw);
  }
  double total = 0.0;
  double mean = 0.0;
  for (std::size_t s = 0; s < subsets; ++s) {
    logw[s] = std::exp(logw[s] - mx);
    total += logw[s];
    mean += logw[s] * ksum[s];
  }
  mean /= total;
  double var = 0.0;
  for (std::size_t s = 0; s < subsets; ++s) {
    const double d = ksum[s] - mean;
    var += logw[s] * d * d;
  }
  return 12.0 * var / total;
}

Complex NlsBrightSoliton::operator()(double t, double x) const {
  const double amp = a * std::sqrt(2.0 / beta) / std::cosh(a * (x - x0 - 2.0 * xi * t));
  return std::polar(amp, xi * x + (a * a - xi * xi) * t + phase);
}

double NlsGraySoliton::kappa() const { return 0.5 * (c - std::sqrt(2.0 * b1)); }

double NlsGraySoliton::omega() const { return b0 - 0.25 * (c * c - 2.0 * b1); }

Complex NlsGraySoliton::operator()(double t, double x) const {
  const double xi = x - c * t;
  const double xw = xi - period * std::round(xi / period);
  const double xs = xw + c * t;
  const double theta = kappa() * (xs - c * t) - omega() * t;
  const Complex inner(std::sqrt(1.0 - b1 / b0) * std::tanh(std::sqrt(0.5 * (b0 - b1)) * xw),
                      std::sqrt(b1 / b0));
  return std::sqrt(b0) * std::polar(1.0, theta) * inner;
}

Complex NlsTwoGraySoliton::operator()(double t, double x) const {
  const double centre = 2.0 * k * t;
  const double xw = (x - centre) - period * std::round((x - centre) / period);
  const double xs = xw + centre;
  const double mu = 4.0 * std::sqrt(a1 * (a3 - a1));
  const double p = std::sqrt(a3 - a1);
  const double at = 0.5 * mu * t;
  const double bx = 2.0 * p * xw / std::sqrt(2.0);
  // cosh/sinh scaled by exp(-shift) to stay finite for large |t|, |x|
  const double shift = std::max(std::abs(at), std::abs(bx));
  auto ch = [shift](double z) { return 0.5 * (std::exp(z - shift) + std::exp(-z - shift)); };
  auto sh = [shift](double z) { return 0.5 * (std::exp(z - shift) - std::exp(-z - shift)); };
  const Complex num((2.0 * a3 - 4.0 * a1) * ch(at) - 2.0 * std::sqrt(a1 * a3) * ch(bx),
                    -mu * sh(at));
  const double den = 2.0 * std::sqrt(a3) * ch(at) + 2.0 * std::sqrt(a1) * ch(bx);
  const Complex tilde = std::polar(1.0, -a3 * t) * num / den;
  return std::polar(1.0, k * xs - k * k * t) * tilde;
}

ClosedForm superpose(std::vector<ClosedForm> parts) {
  return [parts = std::move(parts)](double t, double x) {
    Complex s{};
    for (const auto& p : parts) s += p(t, x);
    return s;
  };
}

std::vector<std::vector<double>> sample_nodal(Equation eq, const SpectralGrid& grid,
                                              const ClosedForm& u, double t) {
  const bool scalar = eq == Equation::bbm || eq == Equation::kdv;
  const auto& x = grid.nodes();
  std::vector<std::vector<double>> out(scalar ? 1 : 2, std::vector<double>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Complex z = u(t, x[i]);
    out[0][i] = z.real();
    if (!scalar) out[1][i] = z.imag();
  }
  return out;
}

State sample_state(Equation eq, const GridPtr& grid, const ClosedForm& u, double t) {
  const auto nodal = sample_nodal(eq, *grid, u, t);
  std::vector<ModalField> fields;
  for (const auto& comp : nodal) fields.push_back(forward_transform(comp, grid));
  State s(std::move(fields));
  if (eq == Equation::hypnls) return hypnls_state_from_nls(s);
  return s;
}

double nodal_l2_error(const State& num, const std::vector<std::vector<double>>& ref) {
  if (ref.size() > num.size()) throw ContractViolation("nodal_l2_error: too many components");
  const std::size_t n = num.grid().n_nodes();
  double s = 0.0;
  for (std::size_t c = 0; c < ref.size(); ++c) {
    if (ref[c].size() != n) throw ContractViolation("nodal_l2_error: size mismatch");
    const auto x = evaluate_on_grid(num[c], n);
    for (std::size_t i = 0; i < n; ++i) s += (x[i] - ref[c][i]) * (x[i] - ref[c][i]);
  }
  return std::sqrt(num.grid().spacing() * s);
}

}  // namespace fgr
