#include "fgr/spectral/grid.hpp"

#include <cmath>
#include <numbers>

#include "fgr/errors.hpp"

namespace fgr {

SpectralGrid::SpectralGrid(double xmin, double xmax, std::size_t n_nodes)
    : xmin_(xmin), xmax_(xmax), n_(n_nodes) {
  if (!(xmax > xmin) || !std::isfinite(xmin) || !std::isfinite(xmax)) {
    throw ContractViolation("SpectralGrid: need finite xmin < xmax");
  }
  if (n_nodes < 2) {
    throw ContractViolation("SpectralGrid: need at least 2 nodes");
  }
  nodes_ = nodes(n_);
  wavenumbers_.resize(n_modes());
  const double k0 = 2.0 * std::numbers::pi / length();
  for (std::size_t j = 0; j < wavenumbers_.size(); ++j) {
    wavenumbers_[j] = k0 * static_cast<double>(j);
  }
}

std::vector<double> SpectralGrid::nodes(std::size_t m) const {
  std::vector<double> x(m);
  const double h = length() / static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = xmin_ + h * static_cast<double>(i);
  }
  return x;
}

}  // namespace fgr
