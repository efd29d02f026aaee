#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fgr/conservation/relaxation.hpp"
#include "fgr/errors.hpp"
#include "fgr/spectral/operations.hpp"

namespace fgr {

std::string to_string(ConservationMode m) {
  switch (m) {
    case ConservationMode::none: return "none";
    case ConservationMode::mass_energy: return "mass-energy";
    case ConservationMode::mass_momentum_energy: return "full";
  }
  return "?";
}

ConservationMode conservation_mode_from_string(const std::string& s) {
  if (s == "none") return ConservationMode::none;
  if (s == "mass-energy" || s == "mass_energy") return ConservationMode::mass_energy;
  if (s == "full" || s == "mass-momentum-energy" || s == "mass_momentum_energy") {
    return ConservationMode::mass_momentum_energy;
  }
  throw ContractViolation("unknown conservation mode '" + s + "'");
}

State project_bbm_kdv(const EquationModel& model, const State& u,
                      const InvariantTriple& targets) {
  if (model.equation() != Equation::bbm && model.equation() != Equation::kdv) {
    throw ContractViolation("project_bbm_kdv: needs a BBM or KdV model");
  }
  const double ubar = targets.mass / model.grid().length();
  State d = u;
  d[0][0] = 0.0;
  State mean = model.zero_state();
  mean[0][0] = ubar;
  const double p_fluct = model.momentum(d);
  const double p_mean = model.momentum(mean);
  const double rad = (targets.momentum - p_mean) / p_fluct;
  if (!(rad > 0.0) || !std::isfinite(rad)) {
    throw DegenerateProjection("mass/momentum projection: radicand " + std::to_string(rad) +
                               " is not positive");
  }
  d *= std::sqrt(rad);
  d[0][0] = ubar;
  return d;
}

namespace {

struct Pair {
  std::size_t a;
  std::size_t b;
  double weight;
};

std::vector<Pair> gradient_pairs(const EquationModel& model) {
  if (model.equation() == Equation::nls) return {{0, 1, 1.0}};
  if (model.equation() == Equation::hypnls) {
    const auto& h = static_cast<const HypNlsModel&>(model);
    return {{0, 1, 1.0}, {2, 3, h.tau()}};
  }
  throw ContractViolation("project_nls: needs an NLS-type model");
}

}  // namespace

State project_nls(const EquationModel& model, const State& s, const InvariantTriple& targets,
                  const ConservationPolicy& policy, NewtonReport* report) {
  const auto pairs = gradient_pairs(model);
  // Quadratic forms of the ansatz:
  //   M(pi) = l^2 M0 + 2 l m P0 + m^2 Mx
  //   P(pi) = l^2 P0 + 2 l m Mx + m^2 Px
  double m0 = 0.0, p0 = 0.0, mx = 0.0, px = 0.0;
  std::vector<ModalField> ax, bx;
  for (const auto& pr : pairs) {
    ax.push_back(derivative(s[pr.a], 1));
    bx.push_back(derivative(s[pr.b], 1));
    const ModalField& a = s[pr.a];
    const ModalField& b = s[pr.b];
    const ModalField bxx = derivative(bx.back(), 1);
    m0 += pr.weight * (inner_product(a, a) + inner_product(b, b));
    p0 += pr.weight * 2.0 * inner_product(a, bx.back());
    mx += pr.weight * (inner_product(ax.back(), ax.back()) + inner_product(bx.back(), bx.back()));
    px += pr.weight * 2.0 * inner_product(ax.back(), bxx);
  }
  const double mt = targets.mass;
  const double pt = targets.momentum;
  const double s1 = std::abs(mt) > 0.0 ? std::abs(mt) : 1.0;
  const double s2 = mt * mx > 0.0 ? std::sqrt(mt * mx) : 1.0;

  auto residual = [&](double l, double m, double& f1, double& f2) {
    f1 = l * l * m0 + 2.0 * l * m * p0 + m * m * mx - mt;
    f2 = l * l * p0 + 2.0 * l * m * mx + m * m * px - pt;
    return std::max(std::abs(f1) / s1, std::abs(f2) / s2);
  };

  double lam = 1.0, mu = 0.0, f1 = 0.0, f2 = 0.0;
  double r = residual(lam, mu, f1, f2);
  int it = 0;
  bool converged = r <= policy.newton_tolerance;
  int polish = converged ? 0 : 1;
  while (!converged || polish > 0) {
    if (converged) --polish;
    if (it >= policy.newton_max_iterations) break;
    const double j11 = 2.0 * (lam * m0 + mu * p0);
    const double j12 = 2.0 * (lam * p0 + mu * mx);
    const double j21 = 2.0 * (lam * p0 + mu * mx);
    const double j22 = 2.0 * (lam * mx + mu * px);
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) {
      if (converged) break;
      throw ProjectionFailure("momentum projection: singular Jacobian", r);
    }
    const double dl = (j22 * f1 - j12 * f2) / det;
    const double dm = (j11 * f2 - j21 * f1) / det;
    double step = 1.0;
    double tl = lam, tm = mu, g1 = f1, g2 = f2, tr = r;
    for (int k = 0; k < 30; ++k) {
      tl = lam - step * dl;
      tm = mu - step * dm;
      tr = residual(tl, tm, g1, g2);
      if (tr < r) break;
      step *= 0.5;
    }
    ++it;
    if (!(tr < r)) {
      if (converged) break;
      throw ProjectionFailure("momentum projection: Newton stalled", r);
    }
    lam = tl, mu = tm, f1 = g1, f2 = g2, r = tr;
    if (!converged && r <= policy.newton_tolerance) converged = true;
  }
  if (!converged) throw ProjectionFailure("momentum projection: Newton did not converge", r);
  if (report) *report = {lam, mu, it, r};

  State out = s;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out[pairs[i].a] *= lam;
    out[pairs[i].a].axpy(mu, bx[i]);
    out[pairs[i].b] *= lam;
    out[pairs[i].b].axpy(-mu, ax[i]);
  }
  return out;
}

State project_hypnls_mass(const State& s, double c, double tau) {
  if (s.size() != 4) throw ContractViolation("project_hypnls_mass: need (v, w, nu, omega)");
  const double q2 = inner_product(s[0], s[0]) + inner_product(s[1], s[1]);
  const double p2 = inner_product(s[2], s[2]) + inner_product(s[3], s[3]);
  const double den = q2 + p2 * tau * tau * tau;
  const double rad = -p2 * q2 * (tau - 1.0) * (tau - 1.0) * tau + c * den;
  if (!(den > 0.0) || !(rad >= 0.0) || !std::isfinite(rad)) {
    throw DegenerateProjection("hyperbolized mass projection: radicand " +
                               std::to_string(rad) + ", denominator " + std::to_string(den));
  }
  const double root = std::sqrt(rad);
  const double alpha1 = (p2 * (tau - 1.0) * tau * tau + root) / den;
  const double alpha2 = (q2 * (1.0 - tau) + tau * root) / den;
  State out = s;
  out[0] *= alpha1;
  out[1] *= alpha1;
  out[2] *= alpha2;
  out[3] *= alpha2;
  return out;
}

State scale_nls_mass(const EquationModel& model, const State& s, double target_mass) {
  const double m = model.mass(s);
  if (!(m > 0.0) || !(target_mass >= 0.0)) {
    throw DegenerateProjection("mass scaling: current mass " + std::to_string(m));
  }
  State out = s;
  out *= std::sqrt(target_mass / m);
  return out;
}

State apply_projection(const EquationModel& model, ConservationMode mode, const State& s,
                       const InvariantTriple& targets, const ConservationPolicy& policy) {
  const Equation eq = model.equation();
  const bool scalar = eq == Equation::bbm || eq == Equation::kdv;
  switch (mode) {
    case ConservationMode::none: return s;
    case ConservationMode::mass_energy:
      if (scalar) return s;
      if (eq == Equation::nls) return scale_nls_mass(model, s, targets.mass);
      return project_hypnls_mass(s, targets.mass, static_cast<const HypNlsModel&>(model).tau());
    case ConservationMode::mass_momentum_energy:
      if (scalar) return project_bbm_kdv(model, s, targets);
      return project_nls(model, s, targets, policy);
  }
  return s;
}

}  // namespace fgr
