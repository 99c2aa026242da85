#pragma once

#include <functional>

#include "ptsmc/types.hpp"

namespace ptsmc {

/// Attitude quaternion split as vector part v = [q1, q2, q3] and scalar part s = q4.
class Quaternion {
public:
  static constexpr double kUnitTolerance = 1e-9;

  /// Identity attitude [0, 0, 0, 1].
  Quaternion() : v_(Vec3::Zero()), s_(1.0) {}

  /// Throws DomainError unless |q|^2 is within kUnitTolerance of 1.
  Quaternion(const Vec3& v, double s);

  /// Skips the unit-norm check. Used for integrator stages, where the norm
  /// drifts between renormalizations.
  static Quaternion unchecked(const Vec3& v, double s) noexcept;

  [[nodiscard]] const Vec3& v() const noexcept { return v_; }
  [[nodiscard]] double s() const noexcept { return s_; }
  [[nodiscard]] double norm() const noexcept;
  [[nodiscard]] Quaternion normalized() const;
  [[nodiscard]] Eigen::Vector4d stacked() const noexcept;

private:
  struct NoCheck {};
  Quaternion(const Vec3& v, double s, NoCheck) noexcept : v_(v), s_(s) {}

  Vec3 v_;
  double s_;
};

/// Rigid body with a symmetric positive-definite inertia matrix (kg m^2).
class RigidBody {
public:
  explicit RigidBody(const Mat3& inertia);

  static RigidBody diagonal(double j1, double j2, double j3);

  [[nodiscard]] const Mat3& inertia() const noexcept { return inertia_; }
  [[nodiscard]] const Mat3& inertia_inverse() const noexcept { return inverse_; }

private:
  Mat3 inertia_;
  Mat3 inverse_;
};

struct AttitudeState {
  Quaternion q;
  Vec3 w = Vec3::Zero();  ///< body angular velocity, rad/s
};

/// Reference quaternion and the derivatives of its vector part at one instant.
struct ReferenceSample {
  Vec3 q1f;
  Vec3 q1f_dot;
  Vec3 q1f_ddot;
  double q4f;
};

/// Time-parameterised attitude reference. The quaternion [q1f; q4f] must be
/// unit norm for every queried t.
struct AttitudeReference {
  std::function<Vec3(double)> q1f;
  std::function<Vec3(double)> q1f_dot;
  std::function<Vec3(double)> q1f_ddot;
  std::function<double(double)> q4f;

  /// Holds a fixed attitude (regulation).
  static AttitudeReference constant(const Quaternion& q);

  /// Evaluates every channel at t; throws DomainError if the sample is not unit norm.
  [[nodiscard]] ReferenceSample at(double t) const;
};

struct QuaternionRate {
  Vec3 v_dot;
  double s_dot;
};

struct TrackingErrors {
  Vec3 eps1;      ///< q1 - q1f
  double eps4;    ///< q4 - q4f
  Vec3 eps1_dot;  ///< 1/2 T(q) w - q1f_dot
};

/// Skew-symmetric cross-product matrix: skew(a) * b == a.cross(b).
[[nodiscard]] Mat3 skew(const Vec3& a) noexcept;

/// T(q) = q4 I + skew(q1). det T(q) = q4 for unit q.
[[nodiscard]] Mat3 t_matrix(const Quaternion& q) noexcept;

/// Quaternion kinematics: v_dot = 1/2 T(q) w, s_dot = -1/2 q1^T w.
/// Does not renormalize.
[[nodiscard]] QuaternionRate kinematics_rate(const Quaternion& q, const Vec3& w) noexcept;

/// Euler's equation solved for w_dot: J^-1 (-w x Jw + torque + d).
[[nodiscard]] Vec3 dynamics_rate(const RigidBody& body, const Vec3& w, const Vec3& torque,
                                 const Vec3& d) noexcept;

[[nodiscard]] TrackingErrors tracking_errors(const AttitudeState& state,
                                             const AttitudeReference& ref, double t);

}  // namespace ptsmc
