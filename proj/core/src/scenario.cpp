#include "ptsmc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ptsmc/envelope.hpp"
#include "ptsmc/errors.hpp"
#include "ptsmc/integrator.hpp"

namespace ptsmc {

namespace {

long step_count(const SimConfig& sim) {
  return static_cast<long>(std::ceil(sim.t_end / sim.dt - 1e-9));
}

void require_dominating_gain(double K, const DisturbanceModel& dist) {
  if (K < dist.bound()) {
    std::ostringstream os;
    os << "switching gain K=" << K << " is below the disturbance bound ||d||_inf <= "
       << dist.bound() << " (K must dominate ||d||_inf)";
    throw DomainError(os.str());
  }
}

}  // namespace

void SimConfig::validate(double delta) const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw DomainError("dt must be positive");
  }
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw DomainError("t_end must be positive");
  }
  if (record_stride < 1) {
    throw DomainError("record_stride must be at least 1");
  }
  if (delta > 0.0 && dt > (delta / 10.0) * (1.0 + 1e-9)) {
    std::ostringstream os;
    os << "dt=" << dt << " cannot resolve the switch margin delta=" << delta
       << " (need dt <= delta / 10)";
    throw DomainError(os.str());
  }
}

DisturbanceModel DisturbanceModel::zero(int dim) {
  return {Kind::Zero, VecX::Zero(dim), 0.0};
}

DisturbanceModel DisturbanceModel::sinusoid(VecX amplitude, double omega) {
  if (!amplitude.allFinite() || !std::isfinite(omega)) {
    throw DomainError("disturbance parameters must be finite");
  }
  return {Kind::Sinusoid, std::move(amplitude), omega};
}

VecX DisturbanceModel::value(double t) const {
  if (kind == Kind::Zero) {
    return VecX::Zero(amplitude.size());
  }
  return amplitude * std::sin(omega * t);
}

double DisturbanceModel::bound() const noexcept {
  if (kind == Kind::Zero || amplitude.size() == 0) {
    return 0.0;
  }
  return amplitude.cwiseAbs().maxCoeff();
}

double DisturbanceModel::rate_bound() const noexcept {
  return bound() * std::abs(omega);
}

std::size_t Trajectory::index_near(double t) const {
  if (times.empty()) {
    throw DomainError("index_near: empty trajectory");
  }
  const auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.begin()) {
    return 0;
  }
  if (it == times.end()) {
    return times.size() - 1;
  }
  const auto hi = static_cast<std::size_t>(it - times.begin());
  return (t - times[hi - 1] <= times[hi] - t) ? hi - 1 : hi;
}

Trajectory run_scalar_scenario(const ScalarScenario& sc) {
  const int n = sc.spec.order();
  if (sc.x0.size() != n) {
    throw DomainError("initial state size does not match the system order");
  }
  if (sc.surface.order() != n) {
    throw DomainError("terminal surface order does not match the system order");
  }
  if (sc.disturbance.dim() != 1) {
    throw DomainError("scalar plant takes a one-dimensional disturbance");
  }
  if (!sc.x0.allFinite()) {
    throw DomainError("initial state must be finite");
  }
  sc.gains.validate();
  sc.sim.validate(sc.spec.delta());
  require_dominating_gain(sc.gains.K, sc.disturbance);

  const auto control = [&](const VecX& x, double t) {
    const std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
    return n == 2 ? ptsmc_second_order(xs, t, sc.spec, sc.gains, sc.plant)
                  : ptsmc_high_order(xs, t, sc.spec, sc.surface, sc.gains, sc.plant);
  };
  const auto rate = [&](double t, const VecX& x) {
    const double u = control(x, t).u;
    const std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
    VecX dx(n);
    dx.head(n - 1) = x.tail(n - 1);
    dx(n - 1) = sc.plant.f(xs) + sc.plant.g(xs) * u + sc.disturbance.value(t)(0);
    return dx;
  };

  Trajectory traj;
  const long steps = step_count(sc.sim);
  const auto reserve = static_cast<std::size_t>(steps / sc.sim.record_stride + 2);
  traj.times.reserve(reserve);
  traj.states.reserve(reserve);
  traj.controls.reserve(reserve);
  traj.sliding.reserve(reserve);
  traj.regimes.reserve(reserve);
  traj.envelope.reserve(reserve);
  traj.disturbance.reserve(reserve);

  double v0 = 0.0;
  const auto record = [&](double t, const VecX& x) {
    const ScalarControl c = control(x, t);
    if (traj.empty()) {
      v0 = 0.5 * c.s.s * c.s.s;
    }
    traj.times.push_back(t);
    traj.states.push_back(x);
    traj.controls.push_back(VecX::Constant(1, c.u));
    traj.sliding.push_back(VecX::Constant(1, c.s.s));
    traj.regimes.push_back(c.s.regime);
    traj.envelope.push_back(envelope_bound(v0, t, sc.spec.t_f(), sc.spec.eta()));
    traj.disturbance.push_back(sc.disturbance.value(t));
  };

  VecX x = sc.x0;
  record(0.0, x);
  for (long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * sc.sim.dt;
    const double h = std::min(sc.sim.dt, sc.sim.t_end - t);
    x = rk4_step(rate, x, t, h);
    const long done = k + 1;
    if (done % sc.sim.record_stride == 0 || done == steps) {
      record(done == steps ? sc.sim.t_end : static_cast<double>(done) * sc.sim.dt, x);
    }
  }
  return traj;
}

Trajectory run_attitude_scenario(const AttitudeScenario& sc) {
  if (sc.spec.order() != 2) {
    throw DomainError("attitude control uses a second-order surface");
  }
  if (sc.disturbance.dim() != 3) {
    throw DomainError("attitude disturbance must be three-dimensional");
  }
  if (!sc.w0.allFinite() || !sc.z0.allFinite()) {
    throw DomainError("initial angular velocity and observer state must be finite");
  }
  sc.gains.validate();
  sc.observer.validate();
  sc.sim.validate(sc.spec.delta());
  require_dominating_gain(sc.gains.K, sc.disturbance);

  const ObserverConfig& obs = sc.observer;
  const RigidBody& body = sc.body;

  struct Unpacked {
    AttitudeState state;
    Vec3 z;
  };
  const auto unpack = [](const VecX& X) {
    return Unpacked{{Quaternion::unchecked(X.segment<3>(0), X(3)), X.segment<3>(4)},
                    X.segment<3>(7)};
  };
  const auto control = [&](const Unpacked& u, double t) {
    const Vec3 d_hat = observer_estimate(u.z, obs, u.state.w);
    return attitude_ptsmc(u.state, sc.reference, d_hat, k2_bound(obs, body, t), t, sc.spec,
                          sc.gains, body);
  };
  const auto rate = [&](double t, const VecX& X) {
    const Unpacked u = unpack(X);
    const AttitudeControl c = control(u, t);
    const Vec3 d = sc.disturbance.value(t);
    const QuaternionRate qr = kinematics_rate(u.state.q, u.state.w);
    VecX dX(10);
    dX.segment<3>(0) = qr.v_dot;
    dX(3) = qr.s_dot;
    dX.segment<3>(4) = dynamics_rate(body, u.state.w, c.torque, d);
    dX.segment<3>(7) =
        observer_rate(make_observer_state(u.z, obs, u.state.w), obs, body, u.state.w, c.torque);
    return dX;
  };

  Trajectory traj;
  const long steps = step_count(sc.sim);
  const auto reserve = static_cast<std::size_t>(steps / sc.sim.record_stride + 2);
  traj.times.reserve(reserve);

  double v0 = 0.0;
  const auto record = [&](double t, const VecX& X) {
    const Unpacked u = unpack(X);
    const AttitudeControl c = control(u, t);
    const ReferenceSample r = sc.reference.at(t);
    if (traj.empty()) {
      v0 = 0.5 * c.s.s.squaredNorm();
    }
    VecX state(7);
    state << X.segment<4>(0), X.segment<3>(4);
    VecX tracking(4);
    tracking << u.state.q.v() - r.q1f, u.state.q.s() - r.q4f;

    traj.times.push_back(t);
    traj.states.push_back(std::move(state));
    traj.controls.push_back(c.torque);
    traj.sliding.push_back(c.s.s);
    traj.regimes.push_back(c.s.regime);
    traj.envelope.push_back(envelope_bound(v0, t, sc.spec.t_f(), sc.spec.eta()));
    traj.disturbance.push_back(sc.disturbance.value(t));
    traj.d_hat.push_back(observer_estimate(u.z, obs, u.state.w));
    traj.tracking.push_back(std::move(tracking));
    traj.k2.push_back(k2_bound(obs, body, t));
  };

  VecX X(10);
  X << sc.q0.v(), sc.q0.s(), sc.w0, sc.z0;
  record(0.0, X);
  for (long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * sc.sim.dt;
    const double h = std::min(sc.sim.dt, sc.sim.t_end - t);
    X = rk4_step(rate, X, t, h);
    const double qn = X.segment<4>(0).norm();
    traj.max_norm_drift = std::max(traj.max_norm_drift, std::abs(qn - 1.0));
    if (sc.sim.renorm_quaternion) {
      X.segment<4>(0) /= qn;
    }
    const long done = k + 1;
    if (done % sc.sim.record_stride == 0 || done == steps) {
      record(done == steps ? sc.sim.t_end : static_cast<double>(done) * sc.sim.dt, X);
    }
  }
  return traj;
}

}  // namespace ptsmc
