#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgr {

/// Caller broke a documented precondition (size mismatch, mixed grids, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base class for failures of the numerics themselves. The CLI maps these to
/// exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularOperatorError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StageSolverSingular : public NumericalError {
 public:
  StageSolverSingular(double wavenumber, std::complex<double> z)
      : NumericalError("implicit stage matrix singular at k=" +
                       std::to_string(wavenumber) + ", z=(" +
                       std::to_string(z.real()) + "," +
                       std::to_string(z.imag()) + ")"),
        wavenumber_(wavenumber),
        z_(z) {}

  double wavenumber() const { return wavenumber_; }
  std::complex<double> z() const { return z_; }

 private:
  double wavenumber_;
  std::complex<double> z_;
};

class DegenerateProjection : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ProjectionFailure : public NumericalError {
 public:
  ProjectionFailure(const std::string& what, double residual)
      : NumericalError(what + " (last residual " + std::to_string(residual) +
                       ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class NoRootError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RelaxationFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A scenario run stopped; carries the failing step and where the last good
/// state was written (empty if writing failed).
class IntegrationFailure : public NumericalError {
 public:
  IntegrationFailure(std::size_t step, const std::string& snapshot, const std::string& cause)
      : NumericalError("step " + std::to_string(step) + " failed: " + cause +
                       (snapshot.empty() ? std::string() : " (state written to " + snapshot + ")")),
        step_(step),
        snapshot_(snapshot) {}
  std::size_t step() const { return step_; }
  const std::string& snapshot() const { return snapshot_; }

 private:
  std::size_t step_;
  std::string snapshot_;
};

}  // namespace fgr
