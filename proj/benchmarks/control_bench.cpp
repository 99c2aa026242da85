#include <benchmark/benchmark.h>

#include <cmath>

#include "ptsmc/control.hpp"
#include "ptsmc/integrator.hpp"
#include "ptsmc/sliding.hpp"

namespace {

using namespace ptsmc;

void BM_SecondOrderLaw(benchmark::State& state) {
  const PtSlidingSpec spec(2, 3.0, 5.0, 0.01);
  const auto plant = ScalarPlant::double_integrator();
  double x[] = {5.0, 3.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptsmc_second_order(x, 1.0, spec, ControlGains{}, plant));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_SecondOrderLaw);

void BM_HighOrderLaw(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PtSlidingSpec spec(n, n + 1.0, 5.0, 0.01);
  std::vector<double> a(static_cast<std::size_t>(n - 1), 0.0);
  for (int k = 0; k < n - 1; ++k) {
    a[static_cast<std::size_t>(k)] = std::tgamma(n) / (std::tgamma(k + 1) * std::tgamma(n - k));
  }
  const ClassicalSurface surf(a);
  const auto plant = ScalarPlant::double_integrator();
  std::vector<double> x(static_cast<std::size_t>(n), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptsmc_high_order(x, 1.0, spec, surf, ControlGains{}, plant));
  }
}
BENCHMARK(BM_HighOrderLaw)->DenseRange(2, 6);

void BM_AttitudeLaw(benchmark::State& state) {
  const RigidBody body = RigidBody::diagonal(10, 12, 14);
  const PtSlidingSpec spec(2, 3.0, 30.0, 0.05);
  const auto ref = AttitudeReference::constant(Quaternion());
  const AttitudeState st{Quaternion(Vec3(std::sqrt(2.0) / 3, -1.0 / 3, std::sqrt(3.0) / 3),
                                    std::sqrt(3.0) / 3),
                         Vec3(0.01, -0.02, 0.03)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        attitude_ptsmc(st, ref, Vec3::Zero(), 0.01, 1.0, spec, ControlGains{}, body));
  }
}
BENCHMARK(BM_AttitudeLaw);

void BM_Rk4Step(benchmark::State& state) {
  const auto rate = [](double, const VecX& x) {
    VecX r(x.size());
    r << x.tail(x.size() - 1), -x(0);
    return r;
  };
  VecX x = VecX::Ones(state.range(0));
  for (auto _ : state) {
    x = rk4_step(rate, x, 0.0, 1e-4);
    benchmark::DoNotOptimize(x.data());
  }
}
BENCHMARK(BM_Rk4Step)->Arg(2)->Arg(10);

}  // namespace
