#include "fgr/reference/residual.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "fgr/errors.hpp"
#include "fgr/spectral/operations.hpp"

namespace fgr {

namespace {

using Complex = std::complex<double>;

std::vector<double> spectral_derivative(const std::vector<double>& values,
                                        const GridPtr& grid, int order) {
  ModalField f = forward_transform(values, grid);
  derivative_inplace(f, order);
  return evaluate_on_grid(f, grid->n_nodes());
}

}  // namespace

double residual_oracle(Equation eq, double beta, const ClosedForm& u, double t,
                       double xmin, double xmax, const ResidualOptions& opts) {
  if (eq == Equation::hypnls) {
    throw ContractViolation("residual_oracle: closed forms are checked against NLS");
  }
  const auto grid = SpectralGrid::make(xmin, xmax, opts.resolution);
  const auto& x = grid->nodes();
  const std::size_t n = x.size();
  // BBM waves evolve slowly and u_txx amplifies the rounding in u_t by k^2,
  // so the default step is larger there.
  const double h = opts.time_step > 0.0 ? opts.time_step : (eq == Equation::bbm ? 0.05 : 1e-3);
  // eighth-order central difference, offsets 1..4
  constexpr std::array<double, 4> w{4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};

  std::vector<double> ur(n), ui(n), tr(n), ti(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex z = u(t, x[i]);
    ur[i] = z.real();
    ui[i] = z.imag();
    Complex d{};
    for (std::size_t m = 0; m < w.size(); ++m) {
      const double s = static_cast<double>(m + 1) * h;
      d += w[m] * (u(t + s, x[i]) - u(t - s, x[i]));
    }
    d /= h;
    tr[i] = d.real();
    ti[i] = d.imag();
  }

  double worst = 0.0;
  switch (eq) {
    case Equation::bbm: {
      const auto ux = spectral_derivative(ur, grid, 1);
      const auto utxx = spectral_derivative(tr, grid, 2);
      for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(tr[i] + ur[i] * ux[i] - utxx[i]));
      }
      break;
    }
    case Equation::kdv: {
      const auto ux = spectral_derivative(ur, grid, 1);
      const auto uxxx = spectral_derivative(ur, grid, 3);
      for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(tr[i] + ur[i] * ux[i] + uxxx[i]));
      }
      break;
    }
    default: {
      const auto vxx = spectral_derivative(ur, grid, 2);
      const auto wxx = spectral_derivative(ui, grid, 2);
      for (std::size_t i = 0; i < n; ++i) {
        const double rho = ur[i] * ur[i] + ui[i] * ui[i];
        const Complex r(-ti[i] + vxx[i] + beta * rho * ur[i],
                        tr[i] + wxx[i] + beta * rho * ui[i]);
        worst = std::max(worst, std::abs(r));
      }
      break;
    }
  }
  return worst;
}

FineReference::FineReference(Equation eq, const ModelParams& params, double xmin,
                             double xmax, std::size_t n_fine, double dt_fine,
                             const ClosedForm& initial, double t0,
                             const std::string& tableau)
    : t_(t0), dt_(dt_fine) {
  if (!(dt_fine > 0.0)) throw ContractViolation("FineReference: dt must be positive");
  const auto grid = SpectralGrid::make(xmin, xmax, n_fine);
  model_ = make_model(eq, grid, params);
  stepper_ = std::make_unique<ArkStepper>(*model_, tableau_by_name(tableau));
  u_ = sample_state(eq, grid, initial, t0);
  t0_ = t0;
}

void FineReference::advance_to(double t) {
  if (t < t_ - 1e-12 * std::max(1.0, std::abs(t))) {
    throw ContractViolation("FineReference: times must be non-decreasing");
  }
  while (t0_ + static_cast<double>(steps_ + 1) * dt_ <= t) {
    stepper_->step(u_, dt_, next_);
    std::swap(u_, next_);
    ++steps_;
    t_ = t0_ + static_cast<double>(steps_) * dt_;
  }
}

State FineReference::state_at(double t) {
  advance_to(t);
  const double rem = t - t_;
  if (rem <= 1e-14 * std::max(1.0, std::abs(t))) return u_;
  return stepper_->step(u_, rem);
}

std::vector<std::vector<double>> FineReference::nodal_at(double t, std::size_t n_coarse) {
  const std::size_t n_fine = model_->grid().n_nodes();
  if (n_coarse == 0 || n_fine % n_coarse != 0) {
    throw ContractViolation("FineReference: fine grid is not a refinement of the coarse one");
  }
  const State s = state_at(t);
  const std::size_t stride = n_fine / n_coarse;
  const std::size_t comps = model_->equation() == Equation::bbm ||
                                    model_->equation() == Equation::kdv
                                ? 1
                                : 2;
  std::vector<std::vector<double>> out(comps, std::vector<double>(n_coarse));
  for (std::size_t c = 0; c < comps; ++c) {
    const auto vals = evaluate_on_grid(s[c], n_fine);
    for (std::size_t i = 0; i < n_coarse; ++i) out[c][i] = vals[i * stride];
  }
  return out;
}

}  // namespace fgr
