#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fgr/conservation/relaxation.hpp"
#include "fgr/conservation/root_solve.hpp"
#include "fgr/errors.hpp"
#include "fgr/experiments/scenario.hpp"
#include "fgr/reference/solitons.hpp"
#include "fgr/spectral/operations.hpp"
#include "fgr/time/ark.hpp"
#include "oracles.hpp"

using namespace fgr;
using oracle::kPi;

namespace {

ModalField sample(const GridPtr& g, const std::function<double(double)>& fn) {
  std::vector<double> v;
  for (double x : g->nodes()) v.push_back(fn(x));
  return forward_transform(v, g);
}

double max_coeff_diff(const State& a, const State& b) {
  double d = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    d = std::max(d, oracle::max_abs_diff(oracle::coeffs(a[c]), oracle::coeffs(b[c])));
  }
  return d;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

void expect_invariants(const EquationModel& m, const State& s, const InvariantTriple& t, double tol,
                       bool momentum = true) {
  EXPECT_LT(rel(m.mass(s), t.mass), tol);
  if (momentum) EXPECT_LT(rel(m.momentum(s), t.momentum), tol);
  EXPECT_LT(rel(m.energy(s), t.energy), tol);
}

}  // namespace

TEST(RootSolve, Examples) {
  const RootResult a = scalar_root_solve([](double g) { return g - 1.0; });
  EXPECT_DOUBLE_EQ(a.root, 1.0);

  RootOptions o;
  o.lo = 1.0, o.hi = 2.0, o.abs_tol = 1e-14;
  const RootResult b = scalar_root_solve([](double g) { return g * g - 2.0; }, o);
  EXPECT_NEAR(b.root, std::sqrt(2.0), 1e-12);

  RootOptions c;
  c.guess = 1.3;
  c.lo = 0.2;
  c.hi = 1.7;
  const RootResult r = scalar_root_solve([](double g) { return std::pow(g - 1.0, 3); }, c);
  EXPECT_NEAR(r.root, 1.0, 1e-4);
}

TEST(RootSolve, NoSignChangeThrows) {
  EXPECT_THROW(scalar_root_solve([](double g) { return g * g + 1.0; }), NoRootError);
}

TEST(RootSolve, LowerLimitIsNeverReached) {
  // only root at 0, which relaxation must not return
  RootOptions o;
  o.lower_limit = 0.0;
  bool threw = false;
  double seen_min = 1.0;
  try {
    scalar_root_solve([&](double g) { seen_min = std::min(seen_min, g); return g * (1.0 + g * g); }, o);
  } catch (const NoRootError&) {
    threw = true;
  }
  EXPECT_TRUE(threw);
  EXPECT_GT(seen_min, 0.0);
}

TEST(ProjectBbmKdv, AlreadyOnManifoldIsUnchanged) {
  const auto g = SpectralGrid::make(0.0, 2.0 * kPi, 32);
  for (Equation e : {Equation::bbm, Equation::kdv}) {
    const auto m = make_model(e, g);
    const State u{sample(g, [](double x) { return 1.0 + 0.1 * std::sin(x) + 0.05 * std::cos(3 * x); })};
    const State p = project_bbm_kdv(*m, u, m->invariants(u));
    EXPECT_LT(max_coeff_diff(p, u), 1e-14) << to_string(e);
  }
}

TEST(ProjectBbmKdv, ScaleInvariance) {
  const auto g = SpectralGrid::make(0.0, 2.0 * kPi, 32);
  for (Equation e : {Equation::bbm, Equation::kdv}) {
    const auto m = make_model(e, g);
    const State un{sample(g, [](double x) { return 1.0 + 0.1 * std::sin(x) + 0.02 * std::cos(2 * x); })};
    const double mean = un[0].mean();
    for (double s : {0.5, 2.0}) {
      State v = un;
      v[0][0] = 0.0;
      v *= s;
      v[0][0] = mean;
      const State p = project_bbm_kdv(*m, v, m->invariants(un));
      EXPECT_LT(max_coeff_diff(p, un), 1e-14) << to_string(e) << " s=" << s;
    }
  }
}

TEST(ProjectBbmKdv, RestoresMassAndMomentum) {
  const auto g = SpectralGrid::make(0.0, 2.0 * kPi, 32);
  for (Equation e : {Equation::bbm, Equation::kdv}) {
    const auto m = make_model(e, g);
    const State un{sample(g, [](double x) { return 1.0 + 0.1 * std::sin(x); })};
    const State unew{sample(g, [](double x) { return 1.0 + 0.1 * std::sin(x) + 0.01 * std::cos(x); })};
    const auto t = m->invariants(un);
    const State p = project_bbm_kdv(*m, unew, t);
    EXPECT_LT(rel(m->mass(p), t.mass), 1e-13);
    EXPECT_LT(rel(m->momentum(p), t.momentum), 1e-13);
    const State pp = project_bbm_kdv(*m, p, t);
    EXPECT_LT(max_coeff_diff(pp, p), 1e-13);
  }
}

TEST(ProjectBbmKdv, ConstantStateIsDegenerate) {
  const auto g = SpectralGrid::make(0.0, 2.0 * kPi, 16);
  const auto m = make_model(Equation::kdv, g);
  const State un{sample(g, [](double x) { return 1.0 + 0.1 * std::sin(x); })};
  EXPECT_THROW(project_bbm_kdv(*m, State{ModalField::constant(g, 1.0)}, m->invariants(un)),
               DegenerateProjection);
}

TEST(ProjectNls, IdentityAtTargets) {
  const auto g = SpectralGrid::make(-30.0, 30.0, 128);
  NlsModel m(g, 1.0);
  const State u = sample_state(Equation::nls, g, nls_two_soliton_like(1.0), 0.0);
  NewtonReport rep;
  const State p = project_nls(m, u, m.invariants(u), {}, &rep);
  EXPECT_NEAR(rep.lambda, 1.0, 1e-14);
  EXPECT_NEAR(rep.mu, 0.0, 1e-14);
  EXPECT_LT(max_coeff_diff(p, u), 1e-14);
}

TEST(ProjectNls, ScaledRealField) {
  const auto g = SpectralGrid::make(0.0, 2.0 * kPi, 16);
  NlsModel m(g, 1.0);
  const State u{sample(g, [](double x) { return std::cos(x); }), ModalField(g)};
  const auto t = m.invariants(u);
  for (double s : {0.5, 3.0}) {
    NewtonReport rep;
    const State p = project_nls(m, s * u, t, {}, &rep);
    EXPECT_NEAR(rep.lambda, 1.0 / s, 1e-13);
    EXPECT_NEAR(rep.mu, 0.0, 1e-13);
    EXPECT_LT(max_coeff_diff(p, u), 1e-13);
  }
}

TEST(ProjectNls, PerturbedTwoSolitonSnapshot) {
  std::mt19937_64 rng(4);
  const auto g = SpectralGrid::make(-40.0, 40.0, 256);
  NlsModel m(g, 1.0);
  const State u = sample_state(Equation::nls, g, nls_two_soliton_like(1.0), 0.0);
  const auto t = m.invariants(u);
  for (int trial = 0; trial < 3; ++trial) {
    State v = u;
    for (auto& f : v) {
      ModalField noise = oracle::random_field(g, rng, 0.9);
      f.axpy(1e-4, noise);
    }
    NewtonReport rep;
    const State p = project_nls(m, v, t, {}, &rep);
    EXPECT_LT(rel(m.mass(p), t.mass), 1e-12);
    EXPECT_LT(rel(m.momentum(p), t.momentum), 1e-12);
    EXPECT_LE(rep.iterations, 5);
    const State pp = project_nls(m, p, t);
    EXPECT_LT(max_coeff_diff(pp, p), 1e-13);
  }
}

TEST(ProjectHypNls, MassAlreadyMatches) {
  std::mt19937_64 rng(5);
  const auto g = SpectralGrid::make(-5.0, 5.0, 32);
  for (double tau : {1.0, 0.3, 1e-9}) {
    HypNlsModel m(g, 1.0, tau);
    State s{oracle::random_field(g, rng), oracle::random_field(g, rng), oracle::random_field(g, rng),
            oracle::random_field(g, rng)};
    const State p = project_hypnls_mass(s, m.mass(s), tau);
    EXPECT_LT(max_coeff_diff(p, s), 1e-13) << tau;
  }
}

TEST(ProjectHypNls, UniformScalingAtUnitTau) {
  std::mt19937_64 rng(6);
  const auto g = SpectralGrid::make(-5.0, 5.0, 32);
  HypNlsModel m(g, 1.0, 1.0);
  State s{oracle::random_field(g, rng), oracle::random_field(g, rng), oracle::random_field(g, rng),
          oracle::random_field(g, rng)};
  const double c = 2.5 * m.mass(s);
  const State p = project_hypnls_mass(s, c, 1.0);
  EXPECT_LT(max_coeff_diff(p, std::sqrt(c / m.mass(s)) * s), 1e-13);
}

TEST(ProjectHypNls, SmallTauHitsTarget) {
  std::mt19937_64 rng(7);
  const auto g = SpectralGrid::make(-5.0, 5.0, 32);
  const double tau = 1e-9;
  HypNlsModel m(g, 1.0, tau);
  State ref{oracle::random_field(g, rng), oracle::random_field(g, rng), oracle::random_field(g, rng),
            oracle::random_field(g, rng)};
  State s = ref;
  s *= 1.01;
  s[2] *= 0.9;
  const State p = project_hypnls_mass(s, m.mass(ref), tau);
  EXPECT_LT(rel(m.mass(p), m.mass(ref)), 1e-12);
  EXPECT_THROW(project_hypnls_mass(HypNlsModel(g, 1.0, tau).zero_state(), 1.0, tau), DegenerateProjection);
}

TEST(MassEnergyBaselines, IdentityCases) {
  std::mt19937_64 rng(8);
  const auto g = SpectralGrid::make(-5.0, 5.0, 32);
  NlsModel nls(g, 1.0);
  const State u{oracle::random_field(g, rng), oracle::random_field(g, rng)};
  EXPECT_LT(max_coeff_diff(scale_nls_mass(nls, u, nls.mass(u)), u), 1e-14);
  const State two = scale_nls_mass(nls, u, 4.0 * nls.mass(u));
  EXPECT_LT(max_coeff_diff(two, 2.0 * u), 1e-13);

  const auto kdv = make_model(Equation::kdv, g);
  const State k{oracle::random_field(g, rng)};
  const auto t = kdv->invariants(k);
  EXPECT_EQ(max_coeff_diff(apply_projection(*kdv, ConservationMode::mass_energy, k, t), k), 0.0);
  EXPECT_EQ(max_coeff_diff(apply_projection(*kdv, ConservationMode::none, k, t), k), 0.0);
}

TEST(ConservationMode, Names) {
  EXPECT_EQ(conservation_mode_from_string("none"), ConservationMode::none);
  EXPECT_EQ(conservation_mode_from_string("mass-energy"), ConservationMode::mass_energy);
  EXPECT_EQ(conservation_mode_from_string("mass_energy"), ConservationMode::mass_energy);
  EXPECT_EQ(conservation_mode_from_string("full"), ConservationMode::mass_momentum_energy);
  EXPECT_THROW(conservation_mode_from_string("everything"), ContractViolation);
}

class RelaxStepAllModels : public ::testing::TestWithParam<Equation> {};

TEST_P(RelaxStepAllModels, FullPolicyConservesEverything) {
  const Equation eq = GetParam();
  const char* name = eq == Equation::bbm ? "fig2-bbm"
                     : eq == Equation::kdv ? "fig2-kdv"
                     : eq == Equation::nls ? "fig2-nls"
                                           : "fig7-hypnls";
  const Scenario& sc = find_scenario(name);
  const auto g = SpectralGrid::make(sc.xmin, sc.xmax, sc.n_nodes);
  const auto m = make_model(eq, g, sc.params);
  State u = sample_state(eq, g, sc.initial, sc.t0);
  const auto t = m->invariants(u);
  ArkStepper st(*m, ark5_tableau());
  ConservationPolicy pol;
  pol.mode = ConservationMode::mass_momentum_energy;
  for (int i = 0; i < 5; ++i) {
    const RelaxOutcome out = relax_step(*m, u, st.step(u, sc.dt), t, pol);
    EXPECT_NEAR(out.gamma, 1.0, 0.05);
    expect_invariants(*m, out.state, t, 1e-12);
    u = out.state;
  }
}

INSTANTIATE_TEST_SUITE_P(Models, RelaxStepAllModels,
                         ::testing::Values(Equation::bbm, Equation::kdv, Equation::nls, Equation::hypnls),
                         [](const auto& info) { return to_string(info.param); });

TEST(RelaxStep, MassEnergyLeavesMomentumFree) {
  const auto g = SpectralGrid::make(-40.0, 40.0, 256);
  NlsModel m(g, 1.0);
  State u = sample_state(Equation::nls, g, nls_two_soliton_like(1.0), 0.0);
  const auto t = m.invariants(u);
  ArkStepper st(m, ark5_tableau());
  ConservationPolicy pol;
  pol.mode = ConservationMode::mass_energy;
  const RelaxOutcome out = relax_step(m, u, st.step(u, 0.01), t, pol);
  expect_invariants(m, out.state, t, 1e-12, false);
  EXPECT_THROW(relax_step(m, u, u, t, ConservationPolicy{}), ContractViolation);
}

TEST(RelaxStep, ExactSnapshotGivesUnitGamma) {
  // Provisional state = exact solution one step later: the energy is already
  // right, so gamma = 1 up to the semidiscrete error of the snapshot.
  const auto g = SpectralGrid::make(-40.0, 40.0, 512);
  NlsModel m(g, 1.0);
  const ClosedForm init = nls_two_soliton_like(1.0);
  const State u = sample_state(Equation::nls, g, init, 0.0);
  ArkStepper st(m, ark5_tableau());
  State ref = u;
  for (int i = 0; i < 10; ++i) ref = st.step(ref, 1e-3);
  ConservationPolicy pol;
  pol.mode = ConservationMode::mass_momentum_energy;
  const auto t = m.invariants(u);
  const RelaxOutcome out = relax_step(m, u, ref, t, pol);
  EXPECT_NEAR(out.gamma, 1.0, 1e-9);
  expect_invariants(m, out.state, t, 1e-12);
}

TEST(RelaxStep, SteadyStateIsDegenerate) {
  const auto g = SpectralGrid::make(0.0, 10.0, 32);
  const auto m = make_model(Equation::kdv, g);
  const State u{ModalField::constant(g, 1.3)};
  ConservationPolicy pol;
  pol.mode = ConservationMode::mass_energy;
  const RelaxOutcome out = relax_step(*m, u, u, m->invariants(u), pol);
  EXPECT_TRUE(out.degenerate);
  EXPECT_EQ(out.gamma, 1.0);
}

TEST(RelaxStep, NoRootIsReported) {
  // KdV with u = sin x and the search direction a constant shift delta:
  //   g(gamma) = -(gamma delta / 2) (pi + 2 pi gamma^2 delta^2 / 3),
  // which has no positive root.
  const auto g = SpectralGrid::make(0.0, 2.0 * kPi, 32);
  const auto m = make_model(Equation::kdv, g);
  const State u{sample(g, [](double x) { return std::sin(x); })};
  State bad = u;
  bad[0][0] = 0.5;
  ConservationPolicy pol;
  pol.mode = ConservationMode::mass_energy;
  EXPECT_THROW(relax_step(*m, u, bad, m->invariants(u), pol), RelaxationFailure);
}

TEST(RelaxStep, GammaDeviationShrinksWithStep) {
  // |gamma - 1| = O(dt^(p-1)) on interacting NLS data, full relaxation.
  const auto g = SpectralGrid::make(-35.0, 35.0, 256);
  NlsModel m(g, 1.0);
  const State u0 = sample_state(Equation::nls, g, nls_two_soliton_like(1.0), 0.0);
  const auto t = m.invariants(u0);
  ConservationPolicy pol;
  pol.mode = ConservationMode::mass_momentum_energy;
  ArkStepper st(m, ark5_tableau());
  std::vector<double> dts, devs;
  for (double dt : {0.04, 0.02, 0.01, 0.005}) {
    State u = u0;
    double dev = 0.0;
    for (int i = 0; i < int(std::lround(0.4 / dt)); ++i) {
      const RelaxOutcome out = relax_step(m, u, st.step(u, dt), t, pol);
      dev = std::max(dev, std::abs(out.gamma - 1.0));
      u = out.state;
    }
    dts.push_back(dt);
    devs.push_back(dev);
  }
  const double slope = std::log(devs.front() / devs.back()) / std::log(dts.front() / dts.back());
  EXPECT_NEAR(slope, 4.0, 0.5);
}
