#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fgr/spectral/modal_field.hpp"
#include "fgr/spectral/workspace.hpp"

namespace fgr {

// ---------------------------------------------------------------------------
// Modal <-> nodal transforms
// ---------------------------------------------------------------------------

/// Coefficients of the trigonometric interpolant of `values` sampled at the
/// grid nodes.
ModalField forward_transform(std::span<const double> values, GridPtr grid,
                             PaddedWorkspace& ws);
ModalField forward_transform(std::span<const double> values, GridPtr grid);

/// Values of `f` at the m uniform nodes of its domain (zero-padded
/// evaluation). For m > n the complex Nyquist entry contributes both its
/// cosine and sine parts.
std::vector<double> evaluate_on_grid(const ModalField& f, std::size_t m,
                                     PaddedWorkspace& ws);
std::vector<double> evaluate_on_grid(const ModalField& f, std::size_t m);

/// Writes the m nodal values of f into `out` (no allocation).
void evaluate_into(const ModalField& f, std::span<double> out,
                   PaddedWorkspace& ws);

/// Truncating forward transform of m nodal values onto f's half-spectrum.
/// Exact L2 projection when the nodal data is a trigonometric polynomial that
/// does not alias onto the retained modes.
void truncate_from_nodal(std::span<const double> values, ModalField& f,
                         PaddedWorkspace& ws);

// ---------------------------------------------------------------------------
// Diagonal operators
// ---------------------------------------------------------------------------

/// c_j <- (i k_j)^order c_j for every stored mode, Nyquist included.
ModalField derivative(const ModalField& f, int order);
void derivative_inplace(ModalField& f, int order);

/// c_j <- symbol(k_j) c_j. Throws SingularOperatorError if the symbol is not
/// finite at some wavenumber.
ModalField apply_diagonal_symbol(const ModalField& f,
                                 const std::function<Complex(double)>& symbol);
/// Precomputed multipliers, one per stored mode.
void apply_multipliers_inplace(ModalField& f, std::span<const Complex> multipliers);

// ---------------------------------------------------------------------------
// Quadrature and de-aliasing
// ---------------------------------------------------------------------------

/// Smallest 7-smooth M with M > (degree+1) n / 2: the padded length on which
/// a degree-`degree` polynomial nonlinearity is projected exactly.
std::size_t dealias_grid_size(std::size_t n, int degree);

/// Smallest 7-smooth M with M > degree * n / 2 + 1: the nodal mean on M
/// points integrates a degree-`degree` polynomial in fields from T_{n}
/// exactly.
std::size_t exact_quadrature_size(std::size_t n, int degree);

/// Exact integral of f g over the domain (Parseval on half-spectra).
double inner_product(const ModalField& f, const ModalField& g);

/// Nodal arrays handed to pointwise maps. All arrays have the same length.
class NodalBlock {
 public:
  NodalBlock(std::size_t nodes, std::vector<std::span<double>> arrays)
      : nodes_(nodes), arrays_(std::move(arrays)) {}
  std::size_t nodes() const { return nodes_; }
  std::size_t count() const { return arrays_.size(); }
  std::span<double> operator[](std::size_t i) const { return arrays_[i]; }

 private:
  std::size_t nodes_;
  std::vector<std::span<double>> arrays_;
};

/// Map from input nodal arrays to output nodal arrays.
using NodalMap = std::function<void(const NodalBlock& in, const NodalBlock& out)>;

/// Evaluates all inputs on m nodes, applies `map`, and truncates each output
/// back to the inputs' half-spectrum. With m = dealias_grid_size(n, p) this
/// is the exact L2 projection of a degree-p nonlinearity; with m = n it is
/// the collocation (aliased) evaluation.
void transform_nonlinearity(std::span<const ModalField* const> inputs,
                            std::size_t m, const NodalMap& map,
                            std::span<ModalField* const> outputs,
                            PaddedWorkspace& ws);

/// transform_nonlinearity on the de-aliased grid for degree `degree`
/// (degree 1 is treated as 2).
void project_nonlinearity(std::span<const ModalField* const> inputs, int degree,
                          const NodalMap& map, std::span<ModalField* const> outputs,
                          PaddedWorkspace& ws);

/// Exact L2 projection of pointwise(u) for a scalar polynomial map of the
/// declared degree.
ModalField projected_nonlinearity(const ModalField& u, int degree,
                                  const std::function<double(double)>& pointwise,
                                  PaddedWorkspace& ws);
ModalField projected_nonlinearity(const ModalField& u, int degree,
                                  const std::function<double(double)>& pointwise);

/// Integrand summed over nodes; returns sum_i integrand(x_i).
using NodalSum = std::function<double(const NodalBlock& in)>;

/// Exact integral of a degree-`degree` polynomial integrand of the inputs:
/// (domain length) x (mean of the nodal integrand on exact_quadrature_size
/// nodes).
double integral_of_nonlinearity(std::span<const ModalField* const> inputs,
                                int degree, const NodalSum& sum,
                                PaddedWorkspace& ws);
double integral_of_nonlinearity(const ModalField& u, int degree,
                                const std::function<double(double)>& pointwise,
                                PaddedWorkspace& ws);
double integral_of_nonlinearity(const ModalField& u, int degree,
                                const std::function<double(double)>& pointwise);

}  // namespace fgr
