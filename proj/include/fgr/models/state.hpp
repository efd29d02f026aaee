#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fgr/spectral/modal_field.hpp"

namespace fgr {

/// Tuple of modal fields on one grid. BBM/KdV use one component (u), NLS two
/// (v, w), the hyperbolized NLS four (v, w, nu, omega).
class State {
 public:
  State() = default;
  explicit State(std::vector<ModalField> fields);
  State(std::initializer_list<ModalField> fields)
      : State(std::vector<ModalField>(fields)) {}
  /// `count` zero fields on `grid`.
  State(const GridPtr& grid, std::size_t count);

  std::size_t size() const { return fields_.size(); }
  const ModalField& operator[](std::size_t i) const { return fields_[i]; }
  ModalField& operator[](std::size_t i) { return fields_[i]; }
  const GridPtr& grid_ptr() const { return fields_.front().grid_ptr(); }
  const SpectralGrid& grid() const { return fields_.front().grid(); }

  auto begin() { return fields_.begin(); }
  auto end() { return fields_.end(); }
  auto begin() const { return fields_.begin(); }
  auto end() const { return fields_.end(); }

  /// this += a * x
  void axpy(double a, const State& x);
  void set_zero();
  State& operator+=(const State& other);
  State& operator-=(const State& other);
  State& operator*=(double s);

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(double s, State a) { return a *= s; }

 private:
  std::vector<ModalField> fields_;
};

/// Sum over components of the exact L2 inner products.
double inner_product(const State& a, const State& b);

/// Discrete L2 distance sqrt(dx * sum_i |a(x_i) - b(x_i)|^2) over the n grid
/// nodes, all components summed.
double nodal_l2_distance(const State& a, const State& b);

}  // namespace fgr
