#pragma once

#include <functional>
#include <span>

#include "ptsmc/dynamics.hpp"
#include "ptsmc/sliding.hpp"
#include "ptsmc/types.hpp"

namespace ptsmc {

/// Switching and terminal-phase gains.
struct ControlGains {
  double K = 0.01;   ///< switching gain, must dominate the disturbance bound
  double K1 = 1.0;   ///< terminal-phase linear gain
  double phi = 0.0;  ///< boundary-layer width; 0 selects the pure sign function

  /// Throws DomainError unless K > 0, K1 > 0 and phi >= 0.
  void validate() const;
};

/// x_n' = f(x) + g(x) u + d for the chain-of-integrators plant.
struct ScalarPlant {
  std::function<double(std::span<const double>)> f;
  std::function<double(std::span<const double>)> g;

  /// f = 0, g = 1.
  static ScalarPlant double_integrator();
};

/// The plant x1' = F, x2' = H + G u + d, evaluated at one point.
///
/// `drift` is the part of dF/dt that does not go through x2', i.e.
/// dF/dx1 * F plus any explicit time dependence of F.
struct VectorPlantPoint {
  VecX F;
  VecX H;
  MatX G;
  MatX dF_dx2;
  VecX drift;
};

/// Callable form of the vector plant. Callables receive (x1, x2, t) and must be
/// side-effect free.
struct VectorPlant {
  using VecFn = std::function<VecX(const VecX&, const VecX&, double)>;
  using MatFn = std::function<MatX(const VecX&, const VecX&, double)>;

  VecFn F;
  VecFn H;
  MatFn G;
  MatFn dF_dx1;
  MatFn dF_dx2;
  VecFn dF_dt;  ///< optional; treated as zero when empty

  [[nodiscard]] VectorPlantPoint evaluate(const VecX& x1, const VecX& x2, double t) const;
};

struct ScalarControl {
  double u;
  SlidingValue<double> s;
};

struct VectorControl {
  VecX u;
  SlidingValue<VecX> s;
};

struct AttitudeControl {
  Vec3 torque;
  SlidingValue<Vec3> s;
};

/// sgn(s) with sgn(0) = 0, or clamp(s / phi, -1, 1) when phi > 0.
[[nodiscard]] double switching(double s, double phi) noexcept;

/// Two-phase law for x1' = x2, x2' = f + g u + d.
[[nodiscard]] ScalarControl ptsmc_second_order(std::span<const double> x, double t,
                                               const PtSlidingSpec& spec,
                                               const ControlGains& gains,
                                               const ScalarPlant& plant);

/// Two-phase law for a chain of n integrators. The prescribed-phase reaching
/// term is (eta + n - 2) s / (t_f - t)^n.
[[nodiscard]] ScalarControl ptsmc_high_order(std::span<const double> x, double t,
                                             const PtSlidingSpec& spec,
                                             const ClassicalSurface& surf,
                                             const ControlGains& gains,
                                             const ScalarPlant& plant);

/// Two-phase law for the vector plant, given the plant evaluated at (x1, x2, t).
/// The switching term is K * ||dF/dx2||_2 * sgn(s) componentwise.
[[nodiscard]] VectorControl ptsmc_vector_second_order(const VecX& x1,
                                                      const VectorPlantPoint& plant, double t,
                                                      const PtSlidingSpec& spec,
                                                      const ControlGains& gains);

[[nodiscard]] VectorControl ptsmc_vector_second_order(const VecX& x1, const VecX& x2, double t,
                                                      const PtSlidingSpec& spec,
                                                      const ControlGains& gains,
                                                      const VectorPlant& plant);

/// Minimum |q4| accepted by the attitude controller.
inline constexpr double kAttitudeSingularityGuard = 1e-3;

/// Observer-based attitude tracking law.
///
/// The vector law is instantiated with x1 = eps1, x2 = w,
/// F = 1/2 T(q) w - q1f_dot, H = J^-1 (-w x Jw + d_hat), G = J^-1 and
/// switching gain K2. `gains.K` is not used; K1 and phi are.
[[nodiscard]] AttitudeControl attitude_ptsmc(const AttitudeState& state,
                                             const AttitudeReference& ref, const Vec3& d_hat,
                                             double K2, double t, const PtSlidingSpec& spec,
                                             const ControlGains& gains, const RigidBody& body);

}  // namespace ptsmc
