#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace fgr {

/// Uniform periodic grid on [xmin, xmax). Nodes are left-inclusive and
/// right-exclusive; wavenumbers cover the half-spectrum j = 0..n/2.
class SpectralGrid {
 public:
  SpectralGrid(double xmin, double xmax, std::size_t n_nodes);

  static std::shared_ptr<const SpectralGrid> make(double xmin, double xmax,
                                                  std::size_t n_nodes) {
    return std::make_shared<const SpectralGrid>(xmin, xmax, n_nodes);
  }

  double xmin() const { return xmin_; }
  double xmax() const { return xmax_; }
  double length() const { return xmax_ - xmin_; }
  std::size_t n_nodes() const { return n_; }
  /// Number of stored half-spectrum coefficients, n/2 + 1.
  std::size_t n_modes() const { return n_ / 2 + 1; }
  bool has_nyquist() const { return n_ % 2 == 0; }
  double spacing() const { return length() / static_cast<double>(n_); }

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& wavenumbers() const { return wavenumbers_; }
  double wavenumber(std::size_t j) const { return wavenumbers_[j]; }

  /// Nodes of an m-point grid on the same domain.
  std::vector<double> nodes(std::size_t m) const;

  friend bool operator==(const SpectralGrid& a, const SpectralGrid& b) {
    return a.xmin_ == b.xmin_ && a.xmax_ == b.xmax_ && a.n_ == b.n_;
  }

 private:
  double xmin_;
  double xmax_;
  std::size_t n_;
  std::vector<double> nodes_;
  std::vector<double> wavenumbers_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

}  // namespace fgr
