#include "fgr/experiments/scenario.hpp"

#include <cmath>

#include "fgr/errors.hpp"

namespace fgr {

std::string to_string(Tier t) { return t == Tier::ci ? "ci" : "full"; }

Tier tier_from_string(const std::string& s) {
  if (s == "ci") return Tier::ci;
  if (s == "full") return Tier::full;
  throw ContractViolation("unknown tier '" + s + "' (expected ci or full)");
}

std::string to_string(ReferenceKind r) {
  switch (r) {
    case ReferenceKind::none: return "none";
    case ReferenceKind::closed_form: return "closed-form";
    case ReferenceKind::fine_reference: return "fine-reference";
  }
  return "none";
}

std::size_t Scenario::steps(Tier tier) const {
  const double span = t_final(tier) - t0;
  const double q = span / dt;
  const double r = std::round(q);
  if (!(r >= 1.0) || std::abs(q - r) > 1e-9 * std::max(1.0, r)) {
    throw ContractViolation("scenario " + name + ": dt does not divide the time span");
  }
  return static_cast<std::size_t>(r);
}

void Scenario::validate() const {
  auto fail = [this](const std::string& what) {
    throw ContractViolation("scenario " + name + ": " + what);
  };
  if (!(xmax > xmin)) fail("empty domain");
  if (n_nodes < 2) fail("need at least 2 nodes");
  if (!(dt > 0.0)) fail("dt must be positive");
  if (!initial) fail("no initial data");
  if (output_every == 0) fail("output cadence must be positive");
  if (equation == Equation::hypnls && !(params.tau > 0.0)) fail("tau must be positive");
  steps(Tier::ci);
  steps(Tier::full);
}

namespace {

ClosedForm real_form(std::function<double(double, double)> f) {
  return [f = std::move(f)](double t, double x) { return std::complex<double>(f(t, x), 0.0); };
}

template <class T>
ClosedForm wrap(T sol) {
  return [sol](double t, double x) { return std::complex<double>(sol(t, x)); };
}

std::vector<Scenario> build_registry() {
  std::vector<Scenario> r;
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));

  auto add = [&r](Scenario s) {
    s.validate();
    r.push_back(std::move(s));
  };

  // Two interacting waves, semidiscrete regime (tiny dt, no relaxation).
  {
    Scenario s;
    s.name = "fig1-bbm";
    s.description = "BBM two-wave data, N=32, dt=5e-3, no relaxation";
    s.equation = Equation::bbm;
    s.xmin = -100.0, s.xmax = 100.0, s.n_nodes = 32, s.dt = 5e-3;
    s.t_final_ci = 50.0, s.t_final_full = 400.0;
    s.initial = bbm_two_wave(), s.initial_label = "bbm-two-wave";
    s.output_every = 100;
    add(s);

    s.name = "fig1-kdv";
    s.description = "KdV two-soliton, N=31, dt=1e-2, no relaxation";
    s.equation = Equation::kdv;
    s.xmin = -200.0, s.xmax = 200.0, s.n_nodes = 31, s.dt = 1e-2;
    s.t_final_ci = 10.0, s.t_final_full = 350.0;
    s.initial = kdv_two_soliton(), s.initial_label = "kdv-two-soliton";
    s.reference = ReferenceKind::none;  // 31 nodes cannot resolve the solitons
    add(s);

    s.name = "fig1-nls";
    s.description = "NLS two-soliton-like data, N=32, dt=1e-4, no relaxation";
    s.equation = Equation::nls;
    s.xmin = -35.0, s.xmax = 35.0, s.n_nodes = 32, s.dt = 1e-4;
    s.t_final_ci = 0.1, s.t_final_full = 10.0;
    s.params.beta = 1.0;
    s.initial = nls_two_soliton_like(1.0), s.initial_label = "nls-two-soliton-like";
    s.reference = ReferenceKind::none;
    add(s);
  }

  // Fully discrete: N=256, large steps, mass-momentum-energy relaxation.
  {
    Scenario s;
    s.name = "fig2-bbm";
    s.description = "BBM two-wave data, N=256, dt=0.5, full relaxation";
    s.equation = Equation::bbm;
    s.xmin = -100.0, s.xmax = 100.0, s.n_nodes = 256, s.dt = 0.5;
    s.t_final_ci = 500.0, s.t_final_full = 5000.0;
    s.conservation = ConservationMode::mass_momentum_energy;
    s.initial = bbm_two_wave(), s.initial_label = "bbm-two-wave";
    add(s);

    s.name = "fig2-kdv";
    s.description = "KdV two-soliton data, N=256, dt=0.1, full relaxation";
    s.equation = Equation::kdv;
    s.xmin = -200.0, s.xmax = 200.0, s.dt = 0.1;
    s.t_final_ci = 100.0, s.t_final_full = 1000.0;
    s.initial = kdv_two_soliton(), s.initial_label = "kdv-two-soliton";
    add(s);

    s.name = "fig2-nls";
    s.description = "NLS two-soliton-like data, N=256, dt=0.01, full relaxation";
    s.equation = Equation::nls;
    s.xmin = -35.0, s.xmax = 35.0, s.dt = 0.01;
    s.t_final_ci = 10.0, s.t_final_full = 100.0;
    s.params.beta = 1.0;
    s.initial = nls_two_soliton_like(1.0), s.initial_label = "nls-two-soliton-like";
    add(s);
  }

  // One wave, order-4 pair, mass-energy relaxation.
  {
    Scenario s;
    s.name = "fig3-bbm";
    s.description = "BBM single wave (c=1.3), N=256, ark4, dt=0.25, mass-energy";
    s.equation = Equation::bbm;
    s.xmin = -100.0, s.xmax = 100.0, s.n_nodes = 256, s.dt = 0.25;
    s.t_final_ci = 250.0, s.t_final_full = 2500.0;
    s.tableau = "ark4";
    s.conservation = ConservationMode::mass_energy;
    s.initial = wrap(BbmSolitary{-20.0, 1.3, 200.0}), s.initial_label = "bbm-solitary";
    s.reference = ReferenceKind::closed_form;
    add(s);

    s.name = "fig3-kdv";
    s.description = "KdV single soliton (k=0.75), N=256, ark4, dt=0.05, mass-energy";
    s.equation = Equation::kdv;
    s.xmin = -200.0, s.xmax = 200.0, s.dt = 0.05;
    s.t_final_ci = 50.0, s.t_final_full = 500.0;
    s.initial = wrap(KdvMultiSoliton{{0.75}, {-50.0}, {}}), s.initial_label = "kdv-soliton";
    s.reference = ReferenceKind::none;
    add(s);

    s.name = "fig3-nls";
    s.description = "NLS benchmark soliton (beta=2), N=256, ark4, dt=0.01, mass-energy";
    s.equation = Equation::nls;
    s.xmin = -35.0, s.xmax = 35.0, s.dt = 0.01;
    s.t_final_ci = 10.0, s.t_final_full = 100.0;
    s.params.beta = 2.0;
    s.initial = nls_benchmark_soliton(), s.initial_label = "nls-benchmark-soliton";
    add(s);
  }

  // Error growth.
  {
    Scenario s;
    s.name = "fig4-kdv2";
    s.description = "KdV two-soliton error growth, N=1024, dt=0.1, t in [0,350]";
    s.equation = Equation::kdv;
    s.xmin = -200.0, s.xmax = 200.0, s.n_nodes = 1024, s.dt = 0.1;
    s.t_final_ci = 350.0, s.t_final_full = 350.0;
    s.conservation = ConservationMode::mass_momentum_energy;
    s.initial = kdv_two_soliton(), s.initial_label = "kdv-two-soliton";
    s.reference = ReferenceKind::closed_form;
    s.output_every = 10;
    s.fit_from = 100.0;
    add(s);

    s.name = "fig4-kdv3";
    s.description = "KdV three-soliton error growth, N=2048, dt=0.1";
    s.xmin = -400.0, s.xmax = 400.0, s.n_nodes = 2048;
    s.t_final_ci = 150.0, s.t_final_full = 1500.0;
    s.initial = kdv_three_soliton(), s.initial_label = "kdv-three-soliton";
    s.fit_from = 300.0;
    add(s);

    s.name = "fig4-nls2";
    s.description = "NLS two-soliton-like error growth against a fine reference, N=1024, dt=0.01";
    s.equation = Equation::nls;
    s.xmin = -35.0, s.xmax = 35.0, s.n_nodes = 1024, s.dt = 0.01;
    s.t_final_ci = 1.0, s.t_final_full = 10.0;
    s.params.beta = 1.0;
    s.initial = nls_two_soliton_like(1.0), s.initial_label = "nls-two-soliton-like";
    s.reference = ReferenceKind::fine_reference;
    s.fit_from = 1.0;
    add(s);

    s.name = "fig4-nls3";
    s.description = "NLS three-soliton-like error growth against a fine reference, N=1024, dt=1e-3";
    s.dt = 1e-3;
    s.t_final_ci = 0.1, s.t_final_full = 10.0;
    s.initial = nls_three_soliton_like(1.0), s.initial_label = "nls-three-soliton-like";
    s.output_every = 100;
    add(s);

    // Collocation counterparts (nonlinearity on N nodes, no projection).
    s.name = "fig5-nls2-colloc";
    s.description = "NLS two-soliton-like data, Fourier collocation, dt=0.01, mass-energy";
    s.dt = 0.01;
    s.t_final_ci = 1.0, s.t_final_full = 10.0;
    s.params.collocation = true;
    s.conservation = ConservationMode::mass_energy;
    s.initial = nls_two_soliton_like(1.0), s.initial_label = "nls-two-soliton-like";
    s.output_every = 10;
    add(s);

    s.name = "fig5-nls3-colloc";
    s.description = "NLS three-soliton-like data, Fourier collocation, dt=2e-3, mass-energy";
    s.dt = 2e-3;
    s.t_final_ci = 0.1, s.t_final_full = 10.0;
    s.initial = nls_three_soliton_like(1.0), s.initial_label = "nls-three-soliton-like";
    s.output_every = 50;
    add(s);
  }

  // Defocusing equation, gray solitons.
  {
    Scenario s;
    s.name = "gray1";
    s.description = "one gray soliton (beta=-1), N=256, dt=0.04, full relaxation";
    s.equation = Equation::nls;
    const NlsGraySoliton g;
    s.xmin = -NlsGraySoliton::kHalfWidth, s.xmax = NlsGraySoliton::kHalfWidth;
    s.n_nodes = 256, s.dt = 0.04;
    s.t_final_ci = 40.0, s.t_final_full = 400.0;
    s.params.beta = -1.0;
    s.conservation = ConservationMode::mass_momentum_energy;
    s.initial = [g](double t, double x) { return g(t, x); };
    s.initial_label = "nls-gray-soliton";
    s.reference = ReferenceKind::closed_form;
    s.output_every = 10;
    add(s);

    s.name = "gray2";
    s.description = "two colliding gray solitons (beta=-1), N=2048, dt=0.04, t in [-70,70]";
    const NlsTwoGraySoliton g2;
    s.xmin = -NlsTwoGraySoliton::kHalfWidth, s.xmax = NlsTwoGraySoliton::kHalfWidth;
    s.n_nodes = 2048;
    s.t0 = -70.0, s.t_final_ci = 70.0, s.t_final_full = 70.0;
    s.initial = [g2](double t, double x) { return g2(t, x); };
    s.initial_label = "nls-two-gray-soliton";
    s.output_every = 25;
    s.fit_from = 10.0;
    add(s);
  }

  // Performance cases.
  {
    Scenario s;
    s.name = "s5-bbm";
    s.description = "BBM solitary wave (c = golden ratio) on [-50,50], 100 nodes, t=2e4";
    s.equation = Equation::bbm;
    s.xmin = -50.0, s.xmax = 50.0, s.n_nodes = 100, s.dt = 0.5;
    s.t_final_ci = 2e4, s.t_final_full = 2e4;
    // Full relaxation has no root here at this step size: after the mass and
    // momentum projections the energy is stationary along the search line.
    s.conservation = ConservationMode::mass_energy;
    s.initial = wrap(BbmSolitary{0.0, phi, 100.0}), s.initial_label = "bbm-solitary";
    s.reference = ReferenceKind::closed_form;
    s.output_every = 400;
    add(s);

    s.name = "s5-nls";
    s.description = "NLS benchmark soliton on [-40,40], 1024 nodes, dt=1/512, t=1";
    s.equation = Equation::nls;
    s.xmin = -40.0, s.xmax = 40.0, s.n_nodes = 1024, s.dt = 1.0 / 512.0;
    s.t_final_ci = 1.0, s.t_final_full = 1.0;
    s.params.beta = 2.0;
    s.initial = nls_benchmark_soliton(), s.initial_label = "nls-benchmark-soliton";
    s.output_every = 64;
    add(s);
  }

  // Hyperbolized NLS.
  {
    Scenario s;
    s.name = "fig7-hypnls";
    s.description = "hyperbolized NLS, tau=1e-9, benchmark soliton, dt=1e-3, mass-energy";
    s.equation = Equation::hypnls;
    s.xmin = -40.0, s.xmax = 40.0, s.n_nodes = 256, s.dt = 1e-3;
    s.t_final_ci = 1.0, s.t_final_full = 10.0;
    s.params.beta = 2.0, s.params.tau = 1e-9;
    s.conservation = ConservationMode::mass_energy;
    s.initial = nls_benchmark_soliton(), s.initial_label = "nls-benchmark-soliton";
    s.reference = ReferenceKind::closed_form;
    s.output_every = 50;
    add(s);

    s.name = "fig7-hypnls3";
    s.description = "hyperbolized NLS, tau=1e-9, three-soliton-like data against a fine reference";
    s.xmin = -35.0, s.xmax = 35.0, s.n_nodes = 1024;
    s.params.beta = 1.0;
    s.t_final_ci = 0.1;
    s.initial = nls_three_soliton_like(1.0), s.initial_label = "nls-three-soliton-like";
    s.reference = ReferenceKind::fine_reference;
    add(s);
  }

  // Temporal order of the relaxed method on one soliton.
  {
    Scenario s;
    s.name = "order-kdv";
    s.description = "KdV single soliton (k=0.75) on [-40,40], N=256, ark5, full relaxation";
    s.equation = Equation::kdv;
    s.xmin = -40.0, s.xmax = 40.0, s.n_nodes = 256, s.dt = 0.05;
    s.t_final_ci = 10.0, s.t_final_full = 10.0;
    s.conservation = ConservationMode::mass_momentum_energy;
    s.initial = wrap(KdvMultiSoliton{{0.75}, {0.0}, {}}), s.initial_label = "kdv-soliton";
    s.reference = ReferenceKind::fine_reference;
    s.output_every = 20;
    add(s);
  }
  return r;
}

}  // namespace

ClosedForm bbm_two_wave() {
  const BbmSolitary a{-20.0, 1.3, 200.0};
  const BbmSolitary b{20.0, 1.2, 200.0};
  return real_form([a, b](double t, double x) { return a(t, x) + b(t, x) - 1.0; });
}

ClosedForm kdv_two_soliton() { return wrap(KdvMultiSoliton{{0.75, 0.5}, {-50.0, 50.0}, {}}); }

ClosedForm kdv_three_soliton() {
  return wrap(KdvMultiSoliton{{0.75, 0.5, 0.25}, {-100.0, 0.0, 100.0}, {}});
}

ClosedForm nls_two_soliton_like(double beta) {
  const NlsBrightSoliton a{1.0, 1.0, -10.0, 0.0, beta};
  const NlsBrightSoliton b{0.8, -1.0, 10.0, 0.5, beta};
  return superpose({a, b});
}

ClosedForm nls_three_soliton_like(double beta) {
  const NlsBrightSoliton a{1.0, 1.0, -10.0, 0.0, beta};
  const NlsBrightSoliton b{0.8, -1.0, 10.0, 0.5, beta};
  const NlsBrightSoliton c{1.2, 0.0, 0.0, 1.0, beta};
  return superpose({a, b, c});
}

ClosedForm nls_benchmark_soliton() {
  const NlsBrightSoliton s{1.0, -2.0, 0.0, 0.0, 2.0};
  return s;
}

const std::vector<Scenario>& scenario_registry() {
  static const std::vector<Scenario> registry = build_registry();
  return registry;
}

std::vector<std::string> scenario_names() {
  std::vector<std::string> out;
  for (const auto& s : scenario_registry()) out.push_back(s.name);
  return out;
}

const Scenario& find_scenario(const std::string& name) {
  for (const auto& s : scenario_registry()) {
    if (s.name == name) return s;
  }
  throw ContractViolation("unknown scenario '" + name + "' (see list-scenarios)");
}

}  // namespace fgr
