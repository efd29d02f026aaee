#include "fgr/models/model.hpp"
#include "fgr/spectral/operations.hpp"

namespace fgr {

void BbmModel::explicit_rhs(const State& s, State& out) const {
  check_state(s, "bbm rhs");
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
  // -(1 - d_xx)^{-1} d_x
  auto c = out[0].coeffs();
  const auto& k = grid_->wavenumbers();
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] *= Complex(0.0, -k[j] / (1.0 + k[j] * k[j]));
  }
}

void BbmModel::implicit_rhs(const State& s, State& out) const {
  check_state(s, "bbm rhs");
  out.set_zero();
}

void BbmModel::solve_implicit(double, const State& rhs, State& out) const {
  out = rhs;
}

double BbmModel::mass(const State& s) const {
  return grid_->length() * s[0].mean();
}

double BbmModel::momentum(const State& s) const {
  const ModalField ux = derivative(s[0], 1);
  return 0.5 * (inner_product(s[0], s[0]) + inner_product(ux, ux));
}

double BbmModel::energy(const State& s) const {
  const ModalField* in[] = {&s[0]};
  return integral_of_nonlinearity(
      in, 3,
      [](const NodalBlock& x) {
        double acc = 0.0;
        for (double u : x[0]) acc += u * u * u;
        return acc / 6.0;
      },
      ws_);
}

}  // namespace fgr
