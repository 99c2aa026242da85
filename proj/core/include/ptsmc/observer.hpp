#pragma once

#include "ptsmc/dynamics.hpp"
#include "ptsmc/types.hpp"

namespace ptsmc {

/// Nonlinear disturbance observer parameters.
///
/// The observer uses lambda(w) = L w with a constant positive diagonal L, so
/// l(w) = dlambda/dw = L.
struct ObserverConfig {
  Mat3 L = Vec3::Constant(10.0).asDiagonal();
  double c = 0.0;         ///< bound on ||d_dot||_inf (per axis)
  double e0_bound = 0.0;  ///< bound on ||d_hat(0) - d(0)||_inf

  /// Throws DomainError unless L is diagonal with positive entries and c, e0_bound >= 0.
  void validate() const;
};

struct ObserverState {
  Vec3 z = Vec3::Zero();
  Vec3 d_hat = Vec3::Zero();
};

/// d_hat = z + L w.
[[nodiscard]] Vec3 observer_estimate(const Vec3& z, const ObserverConfig& cfg,
                                     const Vec3& w) noexcept;

/// Builds a consistent observer state from the internal state z.
[[nodiscard]] ObserverState make_observer_state(const Vec3& z, const ObserverConfig& cfg,
                                                const Vec3& w) noexcept;

/// z_dot = -L (J^-1 (-w x Jw) + J^-1 torque + J^-1 d_hat).
[[nodiscard]] Vec3 observer_rate(const ObserverState& obs, const ObserverConfig& cfg,
                                 const RigidBody& body, const Vec3& w,
                                 const Vec3& torque) noexcept;

/// Smallest diagonal entry of L J^-1; the exponential rate of the error bound.
[[nodiscard]] double observer_decay_rate(const ObserverConfig& cfg, const RigidBody& body);

/// K2(t) = c / l_m + exp(-l_m t) (e0_bound - c / l_m), never below c / l_m.
[[nodiscard]] double k2_bound(const ObserverConfig& cfg, const RigidBody& body, double t);

}  // namespace ptsmc
