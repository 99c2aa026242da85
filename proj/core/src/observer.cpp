#include "ptsmc/observer.hpp"

#include <algorithm>
#include <cmath>

#include "ptsmc/errors.hpp"

namespace ptsmc {

void ObserverConfig::validate() const {
  if (!L.allFinite()) {
    throw DomainError("observer gain L has non-finite entries");
  }
  const Mat3 off = L - Mat3(L.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() != 0.0) {
    throw DomainError("observer gain L must be diagonal");
  }
  if (!(L.diagonal().minCoeff() > 0.0)) {
    throw DomainError("observer gain L must have strictly positive diagonal entries");
  }
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw DomainError("disturbance-rate bound c must be non-negative");
  }
  if (!(e0_bound >= 0.0) || !std::isfinite(e0_bound)) {
    throw DomainError("initial estimation-error bound must be non-negative");
  }
}

Vec3 observer_estimate(const Vec3& z, const ObserverConfig& cfg, const Vec3& w) noexcept {
  return z + cfg.L * w;
}

ObserverState make_observer_state(const Vec3& z, const ObserverConfig& cfg,
                                  const Vec3& w) noexcept {
  return {z, observer_estimate(z, cfg, w)};
}

Vec3 observer_rate(const ObserverState& obs, const ObserverConfig& cfg, const RigidBody& body,
                   const Vec3& w, const Vec3& torque) noexcept {
  const Mat3& J = body.inertia();
  const Mat3& J_inv = body.inertia_inverse();
  return -cfg.L * (J_inv * (-w.cross(J * w)) + J_inv * torque + J_inv * obs.d_hat);
}

double observer_decay_rate(const ObserverConfig& cfg, const RigidBody& body) {
  return (cfg.L * body.inertia_inverse()).diagonal().minCoeff();
}

double k2_bound(const ObserverConfig& cfg, const RigidBody& body, double t) {
  if (!(t >= 0.0)) {
    throw DomainError("k2_bound: t must be non-negative");
  }
  const double lm = observer_decay_rate(cfg, body);
  const double floor = cfg.c / lm;
  const double c1 = cfg.e0_bound - floor;
  if (c1 < 0.0) {
    return floor;
  }
  return floor + std::exp(-lm * t) * c1;
}

}  // namespace ptsmc
