#include <array>
#include <cmath>
#include <utility>

#include "fgr/errors.hpp"
#include "fgr/models/model.hpp"

namespace fgr {

namespace {

using Mat4 = std::array<std::array<Complex, 4>, 4>;
using Vec4 = std::array<Complex, 4>;

// Gaussian elimination with partial pivoting; false if a pivot vanishes.
bool solve4(Mat4 a, Vec4& b) {
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    double best = std::abs(a[col][col]);
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a[r][col]) > best) {
        best = std::abs(a[r][col]);
        piv = r;
      }
    }
    if (!(best > 0.0) || !std::isfinite(best)) return false;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < 4; ++r) {
      const Complex f = a[r][col] / a[col][col];
      if (f == Complex{}) continue;
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int r = 3; r >= 0; --r) {
    Complex acc = b[r];
    for (int c = r + 1; c < 4; ++c) acc -= a[r][c] * b[c];
    b[r] = acc / a[r][r];
  }
  for (const auto& x : b) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return true;
}

}  // namespace

// (-omega_x, nu_x, (w_x - omega)/tau, (-v_x + nu)/tau)
void HypNlsModel::implicit_rhs(const State& s, State& out) const {
  check_state(s, "hypnls rhs");
  const auto v = s[0].coeffs();
  const auto w = s[1].coeffs();
  const auto nu = s[2].coeffs();
  const auto om = s[3].coeffs();
  auto a = out[0].coeffs();
  auto b = out[1].coeffs();
  auto c = out[2].coeffs();
  auto d = out[3].coeffs();
  const auto& k = grid_->wavenumbers();
  const double inv_tau = 1.0 / tau_;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Complex ik(0.0, k[j]);
    a[j] = -ik * om[j];
    b[j] = ik * nu[j];
    c[j] = inv_tau * (ik * w[j] - om[j]);
    d[j] = inv_tau * (-ik * v[j] + nu[j]);
  }
}

void HypNlsModel::solve_implicit(double z, const State& rhs, State& out) const {
  check_state(rhs, "hypnls solve");
  if (out.size() != 4) out = zero_state();
  const auto& k = grid_->wavenumbers();
  const double zt = z / tau_;
  for (std::size_t j = 0; j < k.size(); ++j) {
    const Complex zd(0.0, z * k[j]);
    const Complex zdt(0.0, zt * k[j]);
    // I - z L for the ordering (v, w, nu, omega)
    const Mat4 a{{{1.0, 0.0, 0.0, zd},
                  {0.0, 1.0, -zd, 0.0},
                  {0.0, -zdt, 1.0, zt},
                  {zdt, 0.0, -zt, 1.0}}};
    Vec4 x{rhs[0][j], rhs[1][j], rhs[2][j], rhs[3][j]};
    if (!solve4(a, x)) throw StageSolverSingular(k[j], z);
    for (std::size_t c = 0; c < 4; ++c) out[c][j] = x[c];
  }
  for (std::size_t c = 0; c < 4; ++c) out[c][0].imag(0.0);
}

}  // namespace fgr
