#include <benchmark/benchmark.h>

#include <cmath>

#include "ptsmc/scenario.hpp"

namespace {

using namespace ptsmc;

void BM_FigureOneRun(benchmark::State& state) {
  const ScalarScenario sc{PtSlidingSpec(2, 3.0, 5.0, 0.01),
                          ClassicalSurface::second_order(),
                          ControlGains{},
                          ScalarPlant::double_integrator(),
                          DisturbanceModel::sinusoid(VecX::Constant(1, 0.01), 1.0),
                          SimConfig{1e-4, 7.0, true, 10},
                          (VecX(2) << 5.0, 3.0).finished()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_scalar_scenario(sc));
  }
}
BENCHMARK(BM_FigureOneRun)->Unit(benchmark::kMillisecond);

void BM_AttitudeRun(benchmark::State& state) {
  ObserverConfig obs;
  obs.c = 0.001;
  obs.e0_bound = 0.01;
  const AttitudeScenario sc{
      .q0 = Quaternion(Vec3(std::sqrt(2.0) / 3, -1.0 / 3, std::sqrt(3.0) / 3), std::sqrt(3.0) / 3),
      .disturbance = DisturbanceModel::sinusoid(VecX::Constant(3, 0.01), 0.1),
      .observer = obs,
      .spec = PtSlidingSpec(2, 3.0, 30.0, 0.05),
      .sim = SimConfig{1e-3, 32.0, true, 10},
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_attitude_scenario(sc));
  }
}
BENCHMARK(BM_AttitudeRun)->Unit(benchmark::kMillisecond);

}  // namespace
