#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "fgr/models/state.hpp"
#include "fgr/spectral/workspace.hpp"

namespace fgr {

enum class Equation { bbm, kdv, nls, hypnls };

std::string to_string(Equation e);
Equation equation_from_string(const std::string& name);

struct InvariantTriple {
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;
};

/// Fourier Galerkin semidiscretization in split form
///   u' = F_E(u) + F_I(u),
/// F_E the projected nonlinearity (treated explicitly), F_I the linear stiff
/// part (diagonal per mode, treated implicitly).
///
/// A model owns the FFT workspace used by its evaluations, so one model
/// instance serves one run at a time.
class EquationModel {
 public:
  explicit EquationModel(GridPtr grid) : grid_(std::move(grid)) {}
  virtual ~EquationModel() = default;
  EquationModel(const EquationModel&) = delete;
  EquationModel& operator=(const EquationModel&) = delete;

  virtual Equation equation() const = 0;
  virtual std::size_t components() const = 0;
  /// False for BBM: the whole right-hand side is explicit.
  virtual bool has_stiff_part() const = 0;

  virtual void explicit_rhs(const State& s, State& out) const = 0;
  virtual void implicit_rhs(const State& s, State& out) const = 0;
  /// Solves (I - z L) x = rhs mode by mode, L the stiff linear operator.
  /// Throws StageSolverSingular if some per-mode block is singular.
  virtual void solve_implicit(double z, const State& rhs, State& out) const = 0;

  virtual double mass(const State& s) const = 0;
  virtual double momentum(const State& s) const = 0;
  virtual double energy(const State& s) const = 0;

  InvariantTriple invariants(const State& s) const {
    return {mass(s), momentum(s), energy(s)};
  }

  /// F_E + F_I.
  State rhs(const State& s) const;
  State zero_state() const { return State(grid_, components()); }

  const GridPtr& grid_ptr() const { return grid_; }
  const SpectralGrid& grid() const { return *grid_; }
  PaddedWorkspace& workspace() const { return ws_; }

 protected:
  void check_state(const State& s, const char* where) const;

  GridPtr grid_;
  mutable PaddedWorkspace ws_;
};

/// u_t + u u_x - u_txx = 0.
class BbmModel final : public EquationModel {
 public:
  explicit BbmModel(GridPtr grid) : EquationModel(std::move(grid)) {}
  Equation equation() const override { return Equation::bbm; }
  std::size_t components() const override { return 1; }
  bool has_stiff_part() const override { return false; }
  void explicit_rhs(const State& s, State& out) const override;
  void implicit_rhs(const State& s, State& out) const override;
  void solve_implicit(double z, const State& rhs, State& out) const override;
  double mass(const State& s) const override;
  double momentum(const State& s) const override;
  double energy(const State& s) const override;
};

/// u_t + u u_x + u_xxx = 0.
class KdvModel final : public EquationModel {
 public:
  explicit KdvModel(GridPtr grid) : EquationModel(std::move(grid)) {}
  Equation equation() const override { return Equation::kdv; }
  std::size_t components() const override { return 1; }
  bool has_stiff_part() const override { return true; }
  void explicit_rhs(const State& s, State& out) const override;
  void implicit_rhs(const State& s, State& out) const override;
  void solve_implicit(double z, const State& rhs, State& out) const override;
  double mass(const State& s) const override;
  double momentum(const State& s) const override;
  double energy(const State& s) const override;
};

/// i u_t + u_xx + beta |u|^2 u = 0 for u = v + i w.
///
/// With `collocation` set the cubic term is evaluated on the n grid nodes
/// without de-aliasing (Fourier collocation); invariants are unchanged.
class NlsModel final : public EquationModel {
 public:
  NlsModel(GridPtr grid, double beta, bool collocation = false)
      : EquationModel(std::move(grid)), beta_(beta), collocation_(collocation) {}
  Equation equation() const override { return Equation::nls; }
  std::size_t components() const override { return 2; }
  bool has_stiff_part() const override { return true; }
  void explicit_rhs(const State& s, State& out) const override;
  void implicit_rhs(const State& s, State& out) const override;
  void solve_implicit(double z, const State& rhs, State& out) const override;
  double mass(const State& s) const override;
  double momentum(const State& s) const override;
  double energy(const State& s) const override;

  double beta() const { return beta_; }
  bool collocation() const { return collocation_; }

 private:
  double beta_;
  bool collocation_;
};

/// First-order relaxation system for NLS with parameter tau:
///   v_t = -omega_x - beta (v^2+w^2) w,   tau nu_t    = w_x - omega,
///   w_t =  nu_x    + beta (v^2+w^2) v,   tau omega_t = -v_x + nu.
/// All linear terms, including the first-derivative couplings, are stiff.
class HypNlsModel final : public EquationModel {
 public:
  HypNlsModel(GridPtr grid, double beta, double tau);
  Equation equation() const override { return Equation::hypnls; }
  std::size_t components() const override { return 4; }
  bool has_stiff_part() const override { return true; }
  void explicit_rhs(const State& s, State& out) const override;
  void implicit_rhs(const State& s, State& out) const override;
  void solve_implicit(double z, const State& rhs, State& out) const override;
  double mass(const State& s) const override;
  double momentum(const State& s) const override;
  double energy(const State& s) const override;

  double beta() const { return beta_; }
  double tau() const { return tau_; }

 private:
  double beta_;
  double tau_;
};

/// Extends an NLS state (v, w) to the relaxation system with the
/// equilibrium auxiliaries nu = v_x, omega = w_x.
State hypnls_state_from_nls(const State& nls);

struct ModelParams {
  double beta = 1.0;
  double tau = 1.0;
  bool collocation = false;
};

std::unique_ptr<EquationModel> make_model(Equation eq, GridPtr grid,
                                          const ModelParams& params = {});

}  // namespace fgr
