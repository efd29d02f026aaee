#include <cmath>

#include "fgr/errors.hpp"
#include "fgr/models/model.hpp"
#include "fgr/spectral/operations.hpp"

namespace fgr {

namespace {

// (-beta rho w, beta rho v) with rho = v^2 + w^2
NodalMap cubic_map(double beta) {
  return [beta](const NodalBlock& x, const NodalBlock& y) {
    const auto v = x[0];
    const auto w = x[1];
    const auto fv = y[0];
    const auto fw = y[1];
    for (std::size_t i = 0; i < x.nodes(); ++i) {
      const double rho = v[i] * v[i] + w[i] * w[i];
      fv[i] = -beta * rho * w[i];
      fw[i] = beta * rho * v[i];
    }
  };
}

double quartic_integral(const ModalField& v, const ModalField& w, PaddedWorkspace& ws) {
  const ModalField* in[] = {&v, &w};
  return integral_of_nonlinearity(
      in, 4,
      [](const NodalBlock& x) {
        const auto a = x[0];
        const auto b = x[1];
        double acc = 0.0;
        for (std::size_t i = 0; i < x.nodes(); ++i) {
          const double rho = a[i] * a[i] + b[i] * b[i];
          acc += rho * rho;
        }
        return acc;
      },
      ws);
}

}  // namespace

void NlsModel::explicit_rhs(const State& s, State& out) const {
  check_state(s, "nls rhs");
  const ModalField* in[] = {&s[0], &s[1]};
  ModalField* outs[] = {&out[0], &out[1]};
  if (collocation_) {
    transform_nonlinearity(in, grid_->n_nodes(), cubic_map(beta_), outs, ws_);
  } else {
    project_nonlinearity(in, 3, cubic_map(beta_), outs, ws_);
  }
}

// (-w_xx, v_xx) = (k^2 w, -k^2 v)
void NlsModel::implicit_rhs(const State& s, State& out) const {
  check_state(s, "nls rhs");
  const auto v = s[0].coeffs();
  const auto w = s[1].coeffs();
  auto a = out[0].coeffs();
  auto b = out[1].coeffs();
  const auto& k = grid_->wavenumbers();
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double k2 = k[j] * k[j];
    a[j] = k2 * w[j];
    b[j] = -k2 * v[j];
  }
}

void NlsModel::solve_implicit(double z, const State& rhs, State& out) const {
  check_state(rhs, "nls solve");
  if (out.size() != 2) out = zero_state();
  const auto rv = rhs[0].coeffs();
  const auto rw = rhs[1].coeffs();
  auto xv = out[0].coeffs();
  auto xw = out[1].coeffs();
  const auto& k = grid_->wavenumbers();
  for (std::size_t j = 0; j < xv.size(); ++j) {
    const double zk2 = z * k[j] * k[j];
    const double det = 1.0 + zk2 * zk2;
    if (!(det > 0.0) || !std::isfinite(det)) throw StageSolverSingular(k[j], z);
    const Complex a = rv[j];
    const Complex b = rw[j];
    xv[j] = (a + zk2 * b) / det;
    xw[j] = (b - zk2 * a) / det;
  }
}

double NlsModel::mass(const State& s) const {
  return inner_product(s[0], s[0]) + inner_product(s[1], s[1]);
}

double NlsModel::momentum(const State& s) const {
  return 2.0 * inner_product(s[0], derivative(s[1], 1));
}

double NlsModel::energy(const State& s) const {
  const ModalField vx = derivative(s[0], 1);
  const ModalField wx = derivative(s[1], 1);
  return inner_product(vx, vx) + inner_product(wx, wx) -
         0.5 * beta_ * quartic_integral(s[0], s[1], ws_);
}

HypNlsModel::HypNlsModel(GridPtr grid, double beta, double tau)
    : EquationModel(std::move(grid)), beta_(beta), tau_(tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw ContractViolation("hyperbolized NLS: tau must be positive");
  }
}

void HypNlsModel::explicit_rhs(const State& s, State& out) const {
  check_state(s, "hypnls rhs");
  const ModalField* in[] = {&s[0], &s[1]};
  ModalField* outs[] = {&out[0], &out[1]};
  project_nonlinearity(in, 3, cubic_map(beta_), outs, ws_);
  out[2].set_zero();
  out[3].set_zero();
}

double HypNlsModel::mass(const State& s) const {
  return inner_product(s[0], s[0]) + inner_product(s[1], s[1]) +
         tau_ * (inner_product(s[2], s[2]) + inner_product(s[3], s[3]));
}

double HypNlsModel::momentum(const State& s) const {
  return 2.0 * (inner_product(s[0], derivative(s[1], 1)) +
                tau_ * inner_product(s[2], derivative(s[3], 1)));
}

double HypNlsModel::energy(const State& s) const {
  const ModalField vx = derivative(s[0], 1);
  const ModalField wx = derivative(s[1], 1);
  return 2.0 * inner_product(s[2], vx) - inner_product(s[2], s[2]) +
         2.0 * inner_product(s[3], wx) - inner_product(s[3], s[3]) -
         0.5 * beta_ * quartic_integral(s[0], s[1], ws_);
}

State hypnls_state_from_nls(const State& nls) {
  if (nls.size() != 2) throw ContractViolation("hypnls_state_from_nls: need (v, w)");
  return State{nls[0], nls[1], derivative(nls[0], 1), derivative(nls[1], 1)};
}

}  // namespace fgr
