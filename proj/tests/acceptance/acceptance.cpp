// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "ptsmc/ptsmc.hpp"
#include "support/oracles.hpp"

namespace {

using namespace ptsmc;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s -- %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!pass) {
    ++failures;
  }
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

template <typename F>
auto timed(double& seconds, F&& f) {
  const auto start = Clock::now();
  auto r = f();
  seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

ScalarScenario scalar_preset(const char* name) {
  auto sc = cli::make_scalar_scenario(*cli::base_config(name));
  sc.sim.record_stride = 1;
  return sc;
}

double max_abs(const VecX& v) { return v.cwiseAbs().maxCoeff(); }

double tracking_error_at(const Trajectory& tr, double t) {
  return max_abs(tr.tracking[tr.index_near(t)].head(3));
}

double initial_torque(const Trajectory& tr) { return max_abs(tr.controls.front()); }

Trajectory attitude_run(const char* preset, double& seconds) {
  const auto sc = cli::make_attitude_scenario(*cli::base_config(preset));
  return timed(seconds, [&] { return run_attitude_scenario(sc); });
}

void criterion_1() {
  const auto sc = scalar_preset("fig1");
  double secs = 0.0;
  const auto tr = timed(secs, [&] { return run_scalar_scenario(sc); });
  const double t_sw = sc.spec.switch_time();
  const double at_switch = max_abs(tr.states[tr.index_near(t_sw)]);
  double after = 0.0;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    if (tr.times[i] >= sc.spec.t_f()) {
      after = std::max(after, max_abs(tr.states[i]));
    }
  }
  const bool pass = at_switch <= 1e-2 && after <= 1e-2 && secs < 2.0;
  report(1, "second-order chain settles by t_f - delta", pass,
         fmt("max|x|(t_f-delta)=%.3e, max|x| on [t_f,t_f+2]=%.3e, runtime %.3f s", at_switch,
             after, secs));
}

void criterion_2() {
  const auto sc = scalar_preset("fig2");
  double secs = 0.0;
  const auto tr = timed(secs, [&] { return run_scalar_scenario(sc); });
  const double at_switch = max_abs(tr.states[tr.index_near(sc.spec.switch_time())]);
  const bool pass = at_switch <= 1e-2 && secs < 2.0;
  report(2, "third-order chain settles by t_f - delta", pass,
         fmt("max|x|(t_f-delta)=%.3e, runtime %.3f s", at_switch, secs));
}

void criteria_3_and_4() {
  double s30 = 0.0, s40 = 0.0, s3 = 0.0, s5 = 0.0;
  const auto t30 = attitude_run("case1_30", s30);
  const auto t40 = attitude_run("case1_40", s40);
  const double e30 = tracking_error_at(t30, 30.0);
  const double u30 = initial_torque(t30);
  const double u40 = initial_torque(t40);
  const bool pass3 =
      e30 >= 1e-5 && e30 <= 1e-3 && u30 > u40 && std::max(s30, s40) < 10.0;
  report(3, "attitude t_f=30: error in [1e-5,1e-3], torque(30) > torque(40)", pass3,
         fmt("||eps1(30)||inf=%.3e, |T(0)| t_f=30: %.4f vs t_f=40: %.4f, runtimes %.2f/%.2f s",
             e30, u30, u40, s30, s40));

  const auto r3 = attitude_run("case2_eta3", s3);
  const auto r5 = attitude_run("case2_eta5", s5);
  const double e3 = tracking_error_at(r3, 35.0);
  const double e5 = tracking_error_at(r5, 35.0);
  const double u3 = initial_torque(r3);
  const double u5 = initial_torque(r5);
  const bool pass4 = e5 <= 1e-4 && e5 < e3 && u5 > u3 && std::max(s3, s5) < 10.0;
  report(4, "attitude eta=5 beats eta=3 at t_f=35", pass4,
         fmt("||eps1(35)||inf eta=5: %.3e vs eta=3: %.3e, |T(0)| %.4f vs %.4f, runtimes "
             "%.2f/%.2f s",
             e5, e3, u5, u3, s5, s3));
}

void criterion_5() {
  double worst = 0.0;
  std::string detail;
  bool pass = true;
  for (const char* name : {"fig1", "fig2"}) {
    const auto sc = scalar_preset(name);
    const auto tr = run_scalar_scenario(sc);
    const double ratio = envelope_ratio(tr, sc.spec);
    worst = std::max(worst, ratio);
    pass = pass && ratio <= 1.0 + 1e-2;
    detail += fmt("%s max |s|/envelope=%.6f; ", name, ratio);
  }
  report(5, "sliding variable inside the decay envelope", pass, detail);
}

void criterion_6() {
  const double t_f = 5.0;
  double worst = 0.0;
  int cases = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 4; ++k) {
      const double eta = n + k;
      const auto c = pt_coefficients(n, eta);
      for (int i = 0; i < n; ++i) {
        std::vector<double> x(static_cast<std::size_t>(n), 0.0);
        x[static_cast<std::size_t>(i)] = 1.0;
        const double oracle =
            oracle::sliding_by_finite_differences(x, 0.0, t_f, eta) / std::pow(t_f, i);
        const double got = c[static_cast<std::size_t>(i)];
        worst = std::max(worst, std::abs(got - oracle) / std::abs(oracle));
        ++cases;
      }
    }
  }
  report(6, "surface coefficients match the differentiation oracle", worst <= 1e-6,
         fmt("%d coefficients, worst relative error %.3e", cases, worst));
}

void criterion_7() {
  double secs = 0.0;
  const auto tr = attitude_run("case1_30", secs);
  const auto cfg = *cli::base_config("case1_30");
  const auto sc = cli::make_attitude_scenario(cfg);
  const double lm = observer_decay_rate(sc.observer, sc.body);
  const auto rep = observer_bound_check(tr, 1.2);
  const bool params = std::abs(sc.observer.c - 0.001) < 1e-15 &&
                      std::abs(lm - 10.0 / 14.0) < 1e-15 &&
                      std::abs(sc.observer.c / lm - 0.0014) < 1e-15;
  report(7, "observer error within 1.2 K2(t)", rep.pass && params,
         fmt("max ||d_hat-d||inf / K2 = %.4f, c/l_m = %.6f, l_m = %.6f", rep.max_ratio,
             sc.observer.c / lm, lm));
}

void criterion_8() {
  bool pass = true;
  std::string detail;
  for (double delta : {0.1, 0.01, 0.001}) {
    auto sc = scalar_preset("fig1");
    sc.spec = PtSlidingSpec(2, sc.spec.eta(), sc.spec.t_f(), delta);
    sc.sim.dt = delta / 10.0;
    sc.sim.t_end = sc.spec.switch_time();
    const auto tr = run_scalar_scenario(sc);
    const double u0 = std::abs(tr.controls.front()(0));
    double umax = 0.0;
    for (std::size_t i = 0; i < tr.size(); ++i) {
      if (tr.regimes[i] == Regime::PrescribedPhase) {
        umax = std::max(umax, std::abs(tr.controls[i](0)));
      }
    }
    pass = pass && umax <= 10.0 * u0;
    detail += fmt("delta=%g: max|u|=%.4f (cap %.2f); ", delta, umax, 10.0 * u0);
  }
  report(8, "control stays bounded up to the switch", pass, detail);
}

void criterion_9() {
  bool pass = true;
  std::string detail;
  for (double scale : {0.1, 1.0, 10.0}) {
    auto sc = scalar_preset("fig1");
    sc.x0 *= scale;
    const auto tr = run_scalar_scenario(sc);
    double crossing = INFINITY;
    for (std::size_t i = 0; i < tr.size(); ++i) {
      if (std::abs(tr.states[i](0)) < 1e-2) {
        crossing = tr.times[i];
        break;
      }
    }
    pass = pass && crossing <= sc.spec.t_f();
    detail += fmt("scale %g: first |x1|<1e-2 at t=%.4f; ", scale, crossing);
  }
  report(9, "settling independent of the initial state", pass, detail);
}

void criterion_10() {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> deg(1, 6);
  std::uniform_real_distribution<double> coef(-1.0, 6.0);
  int disagreements = 0;
  int stable = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> a(static_cast<std::size_t>(deg(rng)));
    for (double& v : a) {
      v = coef(rng);
    }
    const bool oracle = oracle::max_root_real_part(a) < 0.0;
    stable += oracle ? 1 : 0;
    disagreements += is_hurwitz(a) != oracle ? 1 : 0;
  }
  report(10, "Routh-Hurwitz test agrees with eigenvalues", disagreements == 0,
         fmt("1000 random polynomials (%d stable), %d disagreements", stable, disagreements));
}

void guarded(int id, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, "raised an exception", false, e.what());
  }
}

}  // namespace

int main() {
  guarded(1, criterion_1);
  guarded(2, criterion_2);
  guarded(3, criteria_3_and_4);
  guarded(5, criterion_5);
  guarded(6, criterion_6);
  guarded(7, criterion_7);
  guarded(8, criterion_8);
  guarded(9, criterion_9);
  guarded(10, criterion_10);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
