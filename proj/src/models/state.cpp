#include "fgr/models/state.hpp"

#include <cmath>

#include "fgr/errors.hpp"
#include "fgr/spectral/operations.hpp"

namespace fgr {

State::State(std::vector<ModalField> fields) : fields_(std::move(fields)) {
  if (fields_.empty()) throw ContractViolation("State: no components");
  for (const auto& f : fields_) require_same_grid(fields_.front(), f, "State");
}

State::State(const GridPtr& grid, std::size_t count) {
  if (count == 0) throw ContractViolation("State: no components");
  fields_.assign(count, ModalField(grid));
}

namespace {
void require_same_shape(const State& a, const State& b, const char* where) {
  if (a.size() != b.size()) {
    throw ContractViolation(std::string(where) + ": component count mismatch");
  }
}
}  // namespace

void State::axpy(double a, const State& x) {
  require_same_shape(*this, x, "State::axpy");
  for (std::size_t i = 0; i < fields_.size(); ++i) fields_[i].axpy(a, x.fields_[i]);
}

void State::set_zero() {
  for (auto& f : fields_) f.set_zero();
}

State& State::operator+=(const State& other) {
  axpy(1.0, other);
  return *this;
}

State& State::operator-=(const State& other) {
  axpy(-1.0, other);
  return *this;
}

State& State::operator*=(double s) {
  for (auto& f : fields_) f *= s;
  return *this;
}

double inner_product(const State& a, const State& b) {
  require_same_shape(a, b, "inner_product");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += inner_product(a[i], b[i]);
  return s;
}

double nodal_l2_distance(const State& a, const State& b) {
  require_same_shape(a, b, "nodal_l2_distance");
  const std::size_t n = a.grid().n_nodes();
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto x = evaluate_on_grid(a[i], n);
    const auto y = evaluate_on_grid(b[i], n);
    for (std::size_t j = 0; j < n; ++j) s += (x[j] - y[j]) * (x[j] - y[j]);
  }
  return std::sqrt(a.grid().spacing() * s);
}

}  // namespace fgr
