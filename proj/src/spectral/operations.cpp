#include "fgr/spectral/operations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fgr/errors.hpp"

namespace fgr {

namespace {

constexpr std::size_t kSpectrumSlot = 0;

// i^r for integer r >= 0.
Complex i_power(int r) {
  switch (r % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void require_inputs_share_grid(std::span<const ModalField* const> inputs,
                               const char* where) {
  if (inputs.empty()) {
    throw ContractViolation(std::string(where) + ": no input fields");
  }
  for (const ModalField* f : inputs) {
    require_same_grid(*inputs.front(), *f, where);
  }
}

}  // namespace

void evaluate_into(const ModalField& f, std::span<double> out, PaddedWorkspace& ws) {
  const SpectralGrid& grid = f.grid();
  const std::size_t n = grid.n_nodes();
  const std::size_t m = out.size();
  if (m < n) {
    throw ContractViolation("evaluate_on_grid: m = " + std::to_string(m) +
                            " is smaller than the field's n = " + std::to_string(n));
  }
  auto spec = ws.complex_scratch(kSpectrumSlot, m);
  std::fill(spec.begin(), spec.end(), Complex{});
  const auto c = f.coeffs();
  std::copy(c.begin(), c.end(), spec.begin());
  if (grid.has_nyquist() && m > n) {
    // Interior mode of the finer grid: the two-sided coefficient is half the
    // weight-one Nyquist entry.
    spec[n / 2] *= 0.5;
  }
  ws.fft(m).backward(spec.data(), out.data());
}

std::vector<double> evaluate_on_grid(const ModalField& f, std::size_t m,
                                     PaddedWorkspace& ws) {
  std::vector<double> out(m);
  if (m < f.grid().n_nodes()) {
    throw ContractViolation("evaluate_on_grid: m smaller than field size");
  }
  auto scratch = ws.real_scratch(0, m);
  evaluate_into(f, scratch, ws);
  std::copy(scratch.begin(), scratch.end(), out.begin());
  return out;
}

std::vector<double> evaluate_on_grid(const ModalField& f, std::size_t m) {
  return evaluate_on_grid(f, m, PaddedWorkspace::thread_default());
}

void truncate_from_nodal(std::span<const double> values, ModalField& f,
                         PaddedWorkspace& ws) {
  const SpectralGrid& grid = f.grid();
  const std::size_t n = grid.n_nodes();
  const std::size_t m = values.size();
  if (m < n) {
    throw ContractViolation("truncate_from_nodal: fewer nodal values than modes");
  }
  auto spec = ws.complex_scratch(kSpectrumSlot, m);
  ws.fft(m).forward(values.data(), spec.data());
  const double scale = 1.0 / static_cast<double>(m);
  auto c = f.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = spec[j] * scale;
  if (grid.has_nyquist() && m > n) c[n / 2] *= 2.0;
  c[0].imag(0.0);
}

ModalField forward_transform(std::span<const double> values, GridPtr grid,
                             PaddedWorkspace& ws) {
  if (!grid) throw ContractViolation("forward_transform: null grid");
  if (values.size() != grid->n_nodes()) {
    throw ContractViolation("forward_transform: got " +
                            std::to_string(values.size()) + " values for a grid of " +
                            std::to_string(grid->n_nodes()) + " nodes");
  }
  ModalField f(std::move(grid));
  truncate_from_nodal(values, f, ws);
  return f;
}

ModalField forward_transform(std::span<const double> values, GridPtr grid) {
  return forward_transform(values, std::move(grid), PaddedWorkspace::thread_default());
}

void derivative_inplace(ModalField& f, int order) {
  if (order < 0) throw ContractViolation("derivative: negative order");
  if (order == 0) return;
  const Complex unit = i_power(order);
  const auto& k = f.grid().wavenumbers();
  auto c = f.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    double kr = 1.0;
    for (int r = 0; r < order; ++r) kr *= k[j];
    c[j] *= unit * kr;
  }
}

ModalField derivative(const ModalField& f, int order) {
  ModalField out = f;
  derivative_inplace(out, order);
  return out;
}

ModalField apply_diagonal_symbol(const ModalField& f,
                                 const std::function<Complex(double)>& symbol) {
  const auto& k = f.grid().wavenumbers();
  std::vector<Complex> mult(f.size());
  for (std::size_t j = 0; j < mult.size(); ++j) {
    mult[j] = symbol(k[j]);
    if (!std::isfinite(mult[j].real()) || !std::isfinite(mult[j].imag())) {
      throw SingularOperatorError("diagonal symbol not finite at k = " +
                                  std::to_string(k[j]));
    }
  }
  ModalField out = f;
  apply_multipliers_inplace(out, mult);
  return out;
}

void apply_multipliers_inplace(ModalField& f, std::span<const Complex> multipliers) {
  if (multipliers.size() != f.size()) {
    throw ContractViolation("apply_multipliers: size mismatch");
  }
  auto c = f.coeffs();
  if (multipliers[0].imag() != 0.0 && c[0] != Complex{}) {
    throw ContractViolation("diagonal symbol must be real at k = 0");
  }
  for (std::size_t j = 0; j < c.size(); ++j) c[j] *= multipliers[j];
  c[0].imag(0.0);
}

std::size_t dealias_grid_size(std::size_t n, int degree) {
  const std::size_t p = static_cast<std::size_t>(std::max(degree, 2));
  return next_7_smooth_above((p + 1) * n / 2);
}

std::size_t exact_quadrature_size(std::size_t n, int degree) {
  const std::size_t p = static_cast<std::size_t>(std::max(degree, 1));
  const std::size_t m = next_7_smooth_above(p * n / 2 + 1);
  return std::max(m, next_7_smooth_above(n - 1));
}

double inner_product(const ModalField& f, const ModalField& g) {
  require_same_grid(f, g, "inner_product");
  const SpectralGrid& grid = f.grid();
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  double sum = a[0].real() * b[0].real();
  const std::size_t last = a.size() - 1;
  double interior = 0.0;
  for (std::size_t j = 1; j < a.size(); ++j) {
    const double re = a[j].real() * b[j].real() + a[j].imag() * b[j].imag();
    if (j == last && grid.has_nyquist()) {
      sum += 0.5 * re;
    } else {
      interior += re;
    }
  }
  return grid.length() * (sum + 2.0 * interior);
}

void transform_nonlinearity(std::span<const ModalField* const> inputs, std::size_t m,
                            const NodalMap& map, std::span<ModalField* const> outputs,
                            PaddedWorkspace& ws) {
  require_inputs_share_grid(inputs, "transform_nonlinearity");
  const GridPtr& grid = inputs.front()->grid_ptr();
  std::vector<std::span<double>> in_arrays;
  std::vector<std::span<double>> out_arrays;
  in_arrays.reserve(inputs.size());
  out_arrays.reserve(outputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto buf = ws.real_scratch(i, m);
    evaluate_into(*inputs[i], buf, ws);
    in_arrays.push_back(buf);
  }
  for (std::size_t o = 0; o < outputs.size(); ++o) {
    out_arrays.push_back(ws.real_scratch(inputs.size() + o, m));
  }
  const NodalBlock in_block(m, std::move(in_arrays));
  const NodalBlock out_block(m, std::move(out_arrays));
  map(in_block, out_block);
  for (std::size_t o = 0; o < outputs.size(); ++o) {
    ModalField& target = *outputs[o];
    if (!target.grid_ptr() || !(target.grid() == *grid)) target = ModalField(grid);
    truncate_from_nodal(out_block[o], target, ws);
  }
}

void project_nonlinearity(std::span<const ModalField* const> inputs, int degree,
                          const NodalMap& map, std::span<ModalField* const> outputs,
                          PaddedWorkspace& ws) {
  require_inputs_share_grid(inputs, "project_nonlinearity");
  const std::size_t m = dealias_grid_size(inputs.front()->grid().n_nodes(), degree);
  transform_nonlinearity(inputs, m, map, outputs, ws);
}

ModalField projected_nonlinearity(const ModalField& u, int degree,
                                  const std::function<double(double)>& pointwise,
                                  PaddedWorkspace& ws) {
  ModalField out(u.grid_ptr());
  const ModalField* in[] = {&u};
  ModalField* outs[] = {&out};
  project_nonlinearity(
      in, degree,
      [&](const NodalBlock& x, const NodalBlock& y) {
        const auto a = x[0];
        const auto b = y[0];
        for (std::size_t i = 0; i < x.nodes(); ++i) b[i] = pointwise(a[i]);
      },
      outs, ws);
  return out;
}

ModalField projected_nonlinearity(const ModalField& u, int degree,
                                  const std::function<double(double)>& pointwise) {
  return projected_nonlinearity(u, degree, pointwise, PaddedWorkspace::thread_default());
}

double integral_of_nonlinearity(std::span<const ModalField* const> inputs, int degree,
                                const NodalSum& sum, PaddedWorkspace& ws) {
  require_inputs_share_grid(inputs, "integral_of_nonlinearity");
  const SpectralGrid& grid = inputs.front()->grid();
  const std::size_t m = exact_quadrature_size(grid.n_nodes(), degree);
  std::vector<std::span<double>> arrays;
  arrays.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto buf = ws.real_scratch(i, m);
    evaluate_into(*inputs[i], buf, ws);
    arrays.push_back(buf);
  }
  const NodalBlock block(m, std::move(arrays));
  return grid.length() * sum(block) / static_cast<double>(m);
}

double integral_of_nonlinearity(const ModalField& u, int degree,
                                const std::function<double(double)>& pointwise,
                                PaddedWorkspace& ws) {
  const ModalField* in[] = {&u};
  return integral_of_nonlinearity(
      in, degree,
      [&](const NodalBlock& x) {
        double s = 0.0;
        for (double v : x[0]) s += pointwise(v);
        return s;
      },
      ws);
}

double integral_of_nonlinearity(const ModalField& u, int degree,
                                const std::function<double(double)>& pointwise) {
  return integral_of_nonlinearity(u, degree, pointwise, PaddedWorkspace::thread_default());
}

}  // namespace fgr
