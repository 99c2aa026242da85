#pragma once

#include <Eigen/Dense>

namespace ptsmc {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

/// Which half of the two-phase control law is active.
enum class Regime {
  PrescribedPhase,  ///< t < t_f - delta, time-varying sliding variable
  TerminalPhase,    ///< t >= t_f - delta, classical sliding variable
};

[[nodiscard]] constexpr const char* to_string(Regime r) noexcept {
  return r == Regime::PrescribedPhase ? "prescribed" : "terminal";
}

/// Sliding variable value tagged with the phase it was computed in.
template <typename T>
struct SlidingValue {
  T s;
  Regime regime;
};

}  // namespace ptsmc
