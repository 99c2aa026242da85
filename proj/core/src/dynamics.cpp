#include "ptsmc/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "ptsmc/errors.hpp"

namespace ptsmc {

Quaternion::Quaternion(const Vec3& v, double s) : v_(v), s_(s) {
  const double n2 = v.squaredNorm() + s * s;
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kUnitTolerance) {
    std::ostringstream os;
    os << "quaternion is not unit norm (|q|^2 = " << n2 << ")";
    throw DomainError(os.str());
  }
}

Quaternion Quaternion::unchecked(const Vec3& v, double s) noexcept {
  return Quaternion(v, s, NoCheck{});
}

double Quaternion::norm() const noexcept { return std::sqrt(v_.squaredNorm() + s_ * s_); }

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("cannot normalize a zero or non-finite quaternion");
  }
  return Quaternion(v_ / n, s_ / n, NoCheck{});
}

Eigen::Vector4d Quaternion::stacked() const noexcept {
  return {v_.x(), v_.y(), v_.z(), s_};
}

RigidBody::RigidBody(const Mat3& inertia) : inertia_(inertia) {
  if (!inertia.allFinite()) {
    throw DomainError("inertia matrix has non-finite entries");
  }
  if ((inertia - inertia.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("inertia matrix is not symmetric");
  }
  const Eigen::SelfAdjointEigenSolver<Mat3> eig(inertia, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw DomainError("inertia matrix is not positive definite");
  }
  inverse_ = inertia.inverse();
}

RigidBody RigidBody::diagonal(double j1, double j2, double j3) {
  return RigidBody(Vec3(j1, j2, j3).asDiagonal());
}

AttitudeReference AttitudeReference::constant(const Quaternion& q) {
  const Vec3 v = q.v();
  const double s = q.s();
  return AttitudeReference{
      .q1f = [v](double) { return v; },
      .q1f_dot = [](double) { return Vec3::Zero().eval(); },
      .q1f_ddot = [](double) { return Vec3::Zero().eval(); },
      .q4f = [s](double) { return s; },
  };
}

ReferenceSample AttitudeReference::at(double t) const {
  ReferenceSample r{q1f(t), q1f_dot(t), q1f_ddot(t), q4f(t)};
  const double n2 = r.q1f.squaredNorm() + r.q4f * r.q4f;
  if (std::abs(n2 - 1.0) > Quaternion::kUnitTolerance) {
    std::ostringstream os;
    os << "reference quaternion is not unit norm at t=" << t << " (|q|^2 = " << n2 << ")";
    throw DomainError(os.str());
  }
  return r;
}

Mat3 skew(const Vec3& a) noexcept {
  Mat3 m;
  m << 0.0, -a.z(), a.y(),
       a.z(), 0.0, -a.x(),
       -a.y(), a.x(), 0.0;
  return m;
}

Mat3 t_matrix(const Quaternion& q) noexcept {
  return q.s() * Mat3::Identity() + skew(q.v());
}

QuaternionRate kinematics_rate(const Quaternion& q, const Vec3& w) noexcept {
  return {0.5 * t_matrix(q) * w, -0.5 * q.v().dot(w)};
}

Vec3 dynamics_rate(const RigidBody& body, const Vec3& w, const Vec3& torque,
                   const Vec3& d) noexcept {
  const Mat3& J = body.inertia();
  return body.inertia_inverse() * (-w.cross(J * w) + torque + d);
}

TrackingErrors tracking_errors(const AttitudeState& state, const AttitudeReference& ref,
                               double t) {
  const ReferenceSample r = ref.at(t);
  return {state.q.v() - r.q1f, state.q.s() - r.q4f,
          0.5 * t_matrix(state.q) * state.w - r.q1f_dot};
}

}  // namespace ptsmc
