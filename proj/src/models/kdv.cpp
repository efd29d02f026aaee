#include "fgr/errors.hpp"
#include "fgr/models/model.hpp"
#include "fgr/spectral/operations.hpp"

namespace fgr {

void KdvModel::explicit_rhs(const State& s, State& out) const {
  check_state(s, "kdv rhs");
  const ModalField* in[] = {&s[0]};
  ModalField* outs[] = {&out[0]};
  project_nonlinearity(
      in, 2,
      [](const NodalBlock& x, const NodalBlock& y) {
        const auto u = x[0];
        const auto f = y[0];
        for (std::size_t i = 0; i < x.nodes(); ++i) f[i] = 0.5 * u[i] * u[i];
      },
      outs, ws_);
  auto c = out[0].coeffs();
  const auto& k = grid_->wavenumbers();
  for (std::size_t j = 0; j < c.size(); ++j) c[j] *= Complex(0.0, -k[j]);
}

// -d_xxx has symbol -(ik)^3 = i k^3
void KdvModel::implicit_rhs(const State& s, State& out) const {
  check_state(s, "kdv rhs");
  const auto u = s[0].coeffs();
  auto c = out[0].coeffs();
  const auto& k = grid_->wavenumbers();
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = Complex(0.0, k[j] * k[j] * k[j]) * u[j];
  }
}

void KdvModel::solve_implicit(double z, const State& rhs, State& out) const {
  check_state(rhs, "kdv solve");
  const auto r = rhs[0].coeffs();
  if (out.size() != 1) out = zero_state();
  auto x = out[0].coeffs();
  const auto& k = grid_->wavenumbers();
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Complex d(1.0, -z * k[j] * k[j] * k[j]);
    if (d == Complex{}) throw StageSolverSingular(k[j], z);
    x[j] = r[j] / d;
  }
}

double KdvModel::mass(const State& s) const {
  return grid_->length() * s[0].mean();
}

double KdvModel::momentum(const State& s) const {
  return 0.5 * inner_product(s[0], s[0]);
}

double KdvModel::energy(const State& s) const {
  const ModalField ux = derivative(s[0], 1);
  const ModalField* in[] = {&s[0]};
  const double cubic = integral_of_nonlinearity(
      in, 3,
      [](const NodalBlock& x) {
        double acc = 0.0;
        for (double u : x[0]) acc += u * u * u;
        return acc;
      },
      ws_);
  return 0.5 * inner_product(ux, ux) - cubic / 6.0;
}

}  // namespace fgr
