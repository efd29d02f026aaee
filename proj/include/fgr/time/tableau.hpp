#pragma once

#include <complex>
#include <string>
#include <vector>

namespace fgr {

/// Additive Runge-Kutta pair sharing weights b and abscissae c. The explicit
/// matrix is strictly lower triangular; the implicit one is lower triangular
/// (ESDIRK when its first diagonal entry is zero). An explicit-only method
/// has an all-zero implicit matrix.
struct ArkTableau {
  std::string name;
  int stages = 0;
  int order = 0;
  std::vector<std::vector<double>> a_explicit;
  std::vector<std::vector<double>> a_implicit;
  std::vector<double> b;
  std::vector<double> c;

  bool has_implicit_part() const;
};

struct TableauDiagnostics {
  double row_sum_explicit = 0.0;   // max_i |sum_j aE_ij - c_i|
  double row_sum_implicit = 0.0;
  double weight_sum = 0.0;         // |sum b - 1|
  double order_conditions = 0.0;   // max residual through min(order, 3)
  bool explicit_strictly_lower = true;
  bool implicit_lower = true;

  double max_residual() const;
  bool ok(double tol = 1e-13) const;
};

TableauDiagnostics validate_tableau(const ArkTableau& t);

/// Kennedy & Carpenter pairs. ark4: ARK4(3)6L[2]SA (2003). ark5:
/// ARK5(4)8L[2]SA2 (2019). ark437: ARK4(3)7L[2]SA1 (2019). ark5_2003:
/// ARK5(4)8L[2]SA (2003). rk4 is the classical four-stage method as an
/// explicit-only pair.
ArkTableau ark4_tableau();
ArkTableau ark5_tableau();
ArkTableau ark437_tableau();
ArkTableau ark5_2003_tableau();
ArkTableau rk4_tableau();

/// "ark4", "ark5", "ark437", "ark5-2003", "rk4", or a path to a coefficient
/// file.
ArkTableau tableau_by_name(const std::string& name);

/// Plain-text format, whitespace separated, '#' starts a comment:
///   name s p
///   aE (s*s values, row-major)
///   aI (s*s values, row-major)
///   b  (s values)
///   c  (s values)
/// Throws ContractViolation on malformed input.
ArkTableau load_tableau(const std::string& path);
ArkTableau parse_tableau(const std::string& text);

/// R(z) = 1 + z b^T (I - z A)^{-1} 1 for one of the two matrices.
std::complex<double> stability_function(const std::vector<std::vector<double>>& a,
                                        const std::vector<double>& b,
                                        std::complex<double> z);

}  // namespace fgr
