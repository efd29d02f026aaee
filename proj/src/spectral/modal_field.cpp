#include "fgr/spectral/modal_field.hpp"

#include <algorithm>
#include <string>

#include "fgr/errors.hpp"

namespace fgr {

ModalField::ModalField(GridPtr grid) : grid_(std::move(grid)) {
  if (!grid_) throw ContractViolation("ModalField: null grid");
  coeffs_.assign(grid_->n_modes(), Complex{});
}

ModalField::ModalField(GridPtr grid, std::vector<Complex> coeffs)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
  if (!grid_) throw ContractViolation("ModalField: null grid");
  if (coeffs_.size() != grid_->n_modes()) {
    throw ContractViolation("ModalField: expected " +
                            std::to_string(grid_->n_modes()) +
                            " coefficients, got " +
                            std::to_string(coeffs_.size()));
  }
  if (coeffs_[0].imag() != 0.0) {
    throw ContractViolation("ModalField: mean coefficient must be real");
  }
}

ModalField ModalField::constant(GridPtr grid, double value) {
  ModalField f(std::move(grid));
  f.coeffs_[0] = value;
  return f;
}

bool ModalField::same_grid(const ModalField& other) const {
  return grid_ == other.grid_ || (grid_ && other.grid_ && *grid_ == *other.grid_);
}

void require_same_grid(const ModalField& a, const ModalField& b,
                       const char* where) {
  if (!a.same_grid(b)) {
    throw ContractViolation(std::string(where) + ": fields on different grids");
  }
}

ModalField& ModalField::operator+=(const ModalField& other) {
  require_same_grid(*this, other, "ModalField::operator+=");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

ModalField& ModalField::operator-=(const ModalField& other) {
  require_same_grid(*this, other, "ModalField::operator-=");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

ModalField& ModalField::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

void ModalField::axpy(double a, const ModalField& x) {
  require_same_grid(*this, x, "ModalField::axpy");
  const Complex* xs = x.coeffs_.data();
  Complex* ys = coeffs_.data();
  const std::size_t n = coeffs_.size();
  for (std::size_t j = 0; j < n; ++j) ys[j] += a * xs[j];
}

void ModalField::set_zero() { std::fill(coeffs_.begin(), coeffs_.end(), Complex{}); }

double parseval_weight(const SpectralGrid& grid, std::size_t j) {
  if (j == 0) return 1.0;
  if (grid.has_nyquist() && j == grid.n_nodes() / 2) return 0.5;
  return 2.0;
}

}  // namespace fgr
