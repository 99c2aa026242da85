#pragma once

#include <optional>
#include <vector>

#include "ptsmc/control.hpp"
#include "ptsmc/dynamics.hpp"
#include "ptsmc/observer.hpp"
#include "ptsmc/sliding.hpp"
#include "ptsmc/types.hpp"

namespace ptsmc {

/// Fixed-step integration settings.
struct SimConfig {
  double dt = 1e-4;
  double t_end = 7.0;
  bool renorm_quaternion = true;
  int record_stride = 1;

  /// Throws DomainError on dt <= 0, t_end <= 0, record_stride < 1, or
  /// dt > delta / 10 when delta > 0.
  void validate(double delta) const;
};

/// Matched disturbance d_i(t) = amplitude_i sin(omega t), or zero.
struct DisturbanceModel {
  enum class Kind { Zero, Sinusoid };

  Kind kind = Kind::Zero;
  VecX amplitude;
  double omega = 0.0;

  static DisturbanceModel zero(int dim);
  static DisturbanceModel sinusoid(VecX amplitude, double omega);

  [[nodiscard]] VecX value(double t) const;
  /// Bound on ||d||_inf.
  [[nodiscard]] double bound() const noexcept;
  /// Bound on ||d_dot||_inf.
  [[nodiscard]] double rate_bound() const noexcept;
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(amplitude.size()); }
};

/// Time-indexed record of a closed-loop run. All per-sample vectors have the
/// same length as `times`, except the attitude-only columns which are empty
/// for scalar runs.
struct Trajectory {
  std::vector<double> times;
  std::vector<VecX> states;    ///< scalar: x1..xn; attitude: q1..q4, w1..w3
  std::vector<VecX> controls;  ///< u, or torque
  std::vector<VecX> sliding;   ///< s under the active definition
  std::vector<Regime> regimes;
  std::vector<double> envelope;  ///< sqrt(2 V0) ((t_f - t) / t_f)^eta, zero for t >= t_f
  std::vector<VecX> disturbance;

  // Attitude-only.
  std::vector<VecX> d_hat;
  std::vector<VecX> tracking;  ///< eps1 (3), eps4
  std::vector<double> k2;

  /// Largest | ||q|| - 1 | seen before renormalization (attitude runs).
  double max_norm_drift = 0.0;

  [[nodiscard]] std::size_t size() const noexcept { return times.size(); }
  [[nodiscard]] bool empty() const noexcept { return times.empty(); }
  /// Index of the sample nearest to t.
  [[nodiscard]] std::size_t index_near(double t) const;
};

/// Chain-of-integrators closed loop (second or higher order).
struct ScalarScenario {
  PtSlidingSpec spec;
  ClassicalSurface surface;
  ControlGains gains;
  ScalarPlant plant;
  DisturbanceModel disturbance;
  SimConfig sim;
  VecX x0;
};

/// Integrates x1' = x2, ..., xn' = f + g u + d under the matching controller.
///
/// The prescribed-phase law is never evaluated at t >= t_f - delta. Throws
/// DomainError for inconsistent inputs (including K below the disturbance
/// bound) and NumericalBlowupError, carrying the offending time, for failures
/// during integration.
[[nodiscard]] Trajectory run_scalar_scenario(const ScalarScenario& scenario);

/// Observer-based spacecraft attitude tracking closed loop.
struct AttitudeScenario {
  RigidBody body = RigidBody::diagonal(10.0, 12.0, 14.0);
  Quaternion q0;
  Vec3 w0 = Vec3::Zero();
  AttitudeReference reference = AttitudeReference::constant(Quaternion());
  DisturbanceModel disturbance;
  ObserverConfig observer;
  Vec3 z0 = Vec3::Zero();
  PtSlidingSpec spec;
  ControlGains gains;
  SimConfig sim;
};

/// Co-integrates quaternion kinematics, Euler dynamics and the observer.
[[nodiscard]] Trajectory run_attitude_scenario(const AttitudeScenario& scenario);

}  // namespace ptsmc
