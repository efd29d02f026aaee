#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fgr/spectral/grid.hpp"

namespace fgr {

using Complex = std::complex<double>;

/// Real trigonometric polynomial stored by its half-spectrum.
///
/// Coefficient c_j multiplies exp(i k_j (x - xmin)). The field is
///
///   u(x) = c_0 + 2 Re sum_{0<j<n/2} c_j e^{i k_j (x-xmin)}
///              + Re(c_{n/2} e^{i k_{n/2} (x-xmin)})      (even n only)
///
/// so for even n the Nyquist entry carries weight one and keeps its full
/// complex value: n+1 real degrees of freedom. For odd n there is no Nyquist
/// term and the field has n degrees of freedom.
class ModalField {
 public:
  ModalField() = default;
  explicit ModalField(GridPtr grid);
  ModalField(GridPtr grid, std::vector<Complex> coeffs);

  static ModalField constant(GridPtr grid, double value);

  const GridPtr& grid_ptr() const { return grid_; }
  const SpectralGrid& grid() const { return *grid_; }
  std::size_t size() const { return coeffs_.size(); }

  std::span<const Complex> coeffs() const { return coeffs_; }
  std::span<Complex> coeffs() { return coeffs_; }
  const Complex& operator[](std::size_t j) const { return coeffs_[j]; }
  Complex& operator[](std::size_t j) { return coeffs_[j]; }

  /// Mean value of the field.
  double mean() const { return coeffs_.empty() ? 0.0 : coeffs_[0].real(); }

  ModalField& operator+=(const ModalField& other);
  ModalField& operator-=(const ModalField& other);
  ModalField& operator*=(double s);
  /// this += a * x
  void axpy(double a, const ModalField& x);
  void set_zero();

  friend ModalField operator+(ModalField a, const ModalField& b) {
    a += b;
    return a;
  }
  friend ModalField operator-(ModalField a, const ModalField& b) {
    a -= b;
    return a;
  }
  friend ModalField operator*(double s, ModalField a) {
    a *= s;
    return a;
  }
  friend ModalField operator-(ModalField a) {
    a *= -1.0;
    return a;
  }

  bool same_grid(const ModalField& other) const;

 private:
  GridPtr grid_;
  std::vector<Complex> coeffs_;
};

/// Throws ContractViolation unless both fields live on equal grids.
void require_same_grid(const ModalField& a, const ModalField& b,
                       const char* where);

/// Parseval weight of coefficient j: 1 for the mean, 2 for interior modes,
/// 1/2 for the Nyquist entry of an even grid.
double parseval_weight(const SpectralGrid& grid, std::size_t j);

}  // namespace fgr
