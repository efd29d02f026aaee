// Acceptance checks 1-10. One PASS/FAIL line per criterion; exit status 1 if
// any criterion fails. Arguments select a subset, e.g. `acceptance 3 4`.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "fgr/errors.hpp"
#include "fgr/experiments/runner.hpp"
#include "fgr/experiments/scenario.hpp"
#include "fgr/experiments/studies.hpp"
#include "fgr/reference/residual.hpp"
#include "fgr/spectral/operations.hpp"

using namespace fgr;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [x]");
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string sci(double v) { return fmt("%.2e", v); }

RunOptions with_mode(ConservationMode m) {
  RunOptions o;
  o.conservation = m;
  return o;
}

// max relative drift of all three invariants below tol
void drifts_below(Verdict& v, const std::string& label, const ScenarioSummary& m, double tol) {
  v.check(m.max_mass_drift < tol && m.max_momentum_drift < tol && m.max_energy_drift < tol,
          label + " M/P/E " + sci(m.max_mass_drift) + "/" + sci(m.max_momentum_drift) + "/" +
              sci(m.max_energy_drift) + " < " + sci(tol));
}

Verdict criterion1() {
  Verdict v;
  for (const char* name : {"fig1-bbm", "fig1-kdv", "fig1-nls"}) {
    const auto r = run_scenario(find_scenario(name), with_mode(ConservationMode::none));
    v.check(r.summary.steps >= 1000, std::string(name) + " " + std::to_string(r.summary.steps) +
                                         " steps");
    drifts_below(v, name, r.summary, 1e-10);
  }
  return v;
}

Verdict criterion2() {
  Verdict v;
  for (const char* name : {"fig2-bbm", "fig2-kdv", "fig2-nls"}) {
    const auto& s = find_scenario(name);
    const auto full = run_scenario(s, with_mode(ConservationMode::mass_momentum_energy));
    v.check(full.summary.steps >= 1000 && s.n_nodes == 256,
            std::string(name) + " N=" + std::to_string(s.n_nodes) + " " +
                std::to_string(full.summary.steps) + " steps");
    drifts_below(v, std::string(name) + " full", full.summary, 1e-12);
    const auto me = run_scenario(s, with_mode(ConservationMode::mass_energy)).summary;
    v.check(me.max_mass_drift < 1e-12 && me.max_energy_drift < 1e-12 &&
                me.max_momentum_drift > 1e-8,
            std::string(name) + " mass-energy M/E " + sci(me.max_mass_drift) + "/" +
                sci(me.max_energy_drift) + " < 1e-12, P " + sci(me.max_momentum_drift) +
                " > 1e-8");
  }
  return v;
}

// Shared by criteria 3 and 4.
const ConvergenceStudy& order_study() {
  static const ConvergenceStudy st = convergence_study(find_scenario("order-kdv"));
  return st;
}

Verdict criterion3() {
  Verdict v;
  const auto& st = order_study();
  std::string errs;
  for (const auto& l : st.levels) errs += (errs.empty() ? "" : ",") + sci(l.error);
  v.check(st.levels.size() == 4, "levels " + std::to_string(st.levels.size()));
  v.check(st.observed_order >= 4.7, "order " + fmt("%.4f", st.observed_order) + " >= 4.7");
  v.detail += "; errors " + errs;
  return v;
}

Verdict criterion4() {
  Verdict v;
  const auto& st = order_study();
  std::string devs;
  std::size_t degenerate = 0;
  for (const auto& l : st.levels) {
    devs += (devs.empty() ? "" : ",") + sci(l.max_gamma_deviation);
    degenerate += l.degenerate_steps;
  }
  v.check(std::isfinite(st.gamma_slope) && std::abs(st.gamma_slope - 4.0) <= 0.5,
          "full |gamma-1| slope " + fmt("%.3f", st.gamma_slope) + " in 4 +- 0.5");
  v.detail += "; |gamma-1| " + devs + "; degenerate steps " + std::to_string(degenerate);
  // diagnostic only: same study with mass-energy relaxation
  const auto me = convergence_study(find_scenario("order-kdv"), {},
                                    with_mode(ConservationMode::mass_energy));
  v.detail += "; (mass-energy slope " + fmt("%.3f", me.gamma_slope) + ", order " +
              fmt("%.3f", me.observed_order) + ")";
  return v;
}

void slope_near(Verdict& v, const std::string& label, double slope, double target, double tol) {
  v.check(std::isfinite(slope) && std::abs(slope - target) <= tol,
          label + " slope " + fmt("%.3f", slope) + " in " + fmt("%g", target) + " +- " +
              fmt("%g", tol));
}

Verdict criterion5() {
  Verdict v;
  const auto st = error_growth_study(find_scenario("fig4-kdv2"),
                                     {ConservationMode::none, ConservationMode::mass_momentum_energy});
  slope_near(v, "baseline", st[0].slope, 2.0, 0.3);
  slope_near(v, "full", st[1].slope, 1.0, 0.3);
  v.detail += "; final errors " + sci(st[0].final_error) + "/" + sci(st[1].final_error);
  return v;
}

Verdict criterion6() {
  Verdict v;
  const auto& g1 = find_scenario("gray1");
  drifts_below(v, "gray1 full",
               run_scenario(g1, with_mode(ConservationMode::mass_momentum_energy)).summary, 1e-12);
  const auto me = run_scenario(g1, with_mode(ConservationMode::mass_energy)).summary;
  v.check(me.max_mass_drift < 1e-12 && me.max_energy_drift < 1e-12,
          "gray1 mass-energy M/E " + sci(me.max_mass_drift) + "/" + sci(me.max_energy_drift) +
              " < 1e-12");
  const auto st = error_growth_study(find_scenario("gray2"),
                                     {ConservationMode::mass_energy,
                                      ConservationMode::mass_momentum_energy});
  slope_near(v, "gray2 mass-energy", st[0].slope, 2.0, 0.4);
  slope_near(v, "gray2 full", st[1].slope, 1.0, 0.4);
  return v;
}

Verdict criterion7() {
  Verdict v;
  v.check(dealias_grid_size(32, 2) == 49 && dealias_grid_size(256, 2) == 392 &&
              dealias_grid_size(32, 3) == 70,
          "table (32,2)->" + std::to_string(dealias_grid_size(32, 2)) + " (256,2)->" +
              std::to_string(dealias_grid_size(256, 2)) + " (32,3)->" +
              std::to_string(dealias_grid_size(32, 3)));
  auto smooth = [](std::size_t m) {
    for (std::size_t p : {2u, 3u, 5u, 7u}) {
      while (m % p == 0) m /= p;
    }
    return m == 1;
  };
  std::size_t mismatches = 0, checked = 0;
  for (int p = 1; p <= 4; ++p) {
    const int q = std::max(p, 2);
    for (std::size_t n = 1; n <= 4096; ++n) {
      std::size_t m = 1;
      while (!(2 * m > std::size_t(q + 1) * n && smooth(m))) ++m;
      if (dealias_grid_size(n, p) != m) ++mismatches;
      ++checked;
    }
  }
  v.check(mismatches == 0, "exhaustive search N<=4096, p<=4: " + std::to_string(mismatches) +
                               " mismatches of " + std::to_string(checked));
  return v;
}

Verdict criterion8() {
  Verdict v;
  // oracle grid spacing about 0.1: finer grids only amplify rounding in the
  // spectral u_xxx / u_txx
  auto check = [&v](const std::string& label, Equation eq, double beta, const ClosedForm& u,
                    double t, double xmin, double xmax, double tol) {
    std::size_t res = 1024;
    while (double(res) * 0.1 < xmax - xmin) res *= 2;
    const double r = residual_oracle(eq, beta, u, t, xmin, xmax, {res, 0.0});
    v.check(r < tol, label + " " + sci(r));
  };
  auto wrap = [](auto f) -> ClosedForm {
    return [f](double t, double x) { return std::complex<double>(f(t, x)); };
  };
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  check("bbm c=1.3", Equation::bbm, 0, wrap(BbmSolitary{-20.0, 1.3, 200.0}), 0, -100, 100, 1e-10);
  // the c=phi wave is shipped in a 100-wide periodic window whose wrap
  // leaves a 1e-13 kink; the formula itself is checked on a wider window
  check("bbm c=phi", Equation::bbm, 0, wrap(BbmSolitary{0.0, phi, 0.0}), 0, -100, 100, 1e-10);
  check("kdv 1-soliton", Equation::kdv, 0, find_scenario("order-kdv").initial, 0, -40, 40, 1e-9);
  check("kdv 1-soliton x0=-50", Equation::kdv, 0, find_scenario("fig3-kdv").initial, 0, -200,
        200, 1e-9);
  for (double t : {0.0, 10.0, 160.0, 320.0}) {
    check("kdv 2-soliton t=" + fmt("%g", t), Equation::kdv, 0, kdv_two_soliton(), t, -200, 200,
          1e-9);
  }
  check("kdv 3-soliton", Equation::kdv, 0, kdv_three_soliton(), 0, -400, 400, 1e-9);
  check("bright", Equation::nls, 2.0, nls_benchmark_soliton(), 0, -40, 40, 1e-10);
  const double h1 = NlsGraySoliton::kHalfWidth, h2 = NlsTwoGraySoliton::kHalfWidth;
  for (double t : {0.0, 40.0}) {
    check("gray1 t=" + fmt("%g", t), Equation::nls, -1.0, find_scenario("gray1").initial, t, -h1,
          h1, 1e-9);
  }
  for (double t : {-70.0, 0.0, 70.0}) {
    check("gray2 t=" + fmt("%g", t), Equation::nls, -1.0, find_scenario("gray2").initial, t, -h2,
          h2, 1e-9);
  }
  return v;
}

Verdict criterion9() {
  Verdict v;
  const auto bbm = perf_bench("bbm-s5", 3);
  v.check(bbm.median_seconds <= 5.0, "bbm-s5 " + fmt("%.3f", bbm.median_seconds) + " s <= 5 s (" +
                                         std::to_string(bbm.steps) + " steps)");
  const auto nls = perf_bench("nls-s5", 3);
  v.check(nls.final_error <= 1e-10, "nls-s5 error " + sci(nls.final_error) + " <= 1e-10 (" +
                                        fmt("%.3f", nls.median_seconds) + " s)");
  return v;
}

Verdict criterion10() {
  Verdict v;
  const auto rep = hyperbolization_study({1e-9});
  const auto& e = rep.entries.at(0);
  v.check(e.deviation < 1e-6, "deviation from NLS " + sci(e.deviation) + " < 1e-6");
  v.check(e.max_mass_drift < 1e-12 && e.max_energy_drift < 1e-12,
          "M/E drift " + sci(e.max_mass_drift) + "/" + sci(e.max_energy_drift) + " < 1e-12");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  using Fn = Verdict (*)();
  const std::vector<Fn> all{criterion1, criterion2, criterion3, criterion4, criterion5,
                            criterion6, criterion7, criterion8, criterion9, criterion10};
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (int c = 1; c <= 10; ++c) {
    if (!wanted.empty() && !wanted.count(c)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = all[c - 1]();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s (%.1fs) %s\n", c, v.pass ? "PASS" : "FAIL", secs,
                v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
