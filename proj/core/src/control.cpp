#include "ptsmc/control.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ptsmc/errors.hpp"

namespace ptsmc {

namespace {

constexpr double kMinEffectiveness = 1e-9;
constexpr double kMaxCondition = 1e12;

double checked_inverse_gain(double g, double t) {
  if (!(std::abs(g) >= kMinEffectiveness)) {
    std::ostringstream os;
    os << "control effectiveness |g(x)| = " << std::abs(g) << " below " << kMinEffectiveness
       << " at t=" << t;
    throw SingularPlantError(os.str());
  }
  return 1.0 / g;
}

VecX switching(const VecX& s, double phi) {
  return s.unaryExpr([phi](double v) { return ptsmc::switching(v, phi); });
}

// Shared body of the vector law. K may be zero here (the observer bound
// K2 vanishes when both c and e0 are zero).
VectorControl vector_law(const VecX& x1, const VectorPlantPoint& p, double t,
                         const PtSlidingSpec& spec, double K, double K1, double phi) {
  const Eigen::Index n = x1.size();
  if (p.F.size() != n || p.H.size() != n || p.drift.size() != n || p.G.rows() != n ||
      p.dF_dx2.rows() != n || p.dF_dx2.cols() != p.H.size() || p.G.cols() != n) {
    throw DomainError("vector plant dimensions are inconsistent");
  }

  const MatX M = p.dF_dx2 * p.G;
  const Eigen::JacobiSVD<MatX> svd(M);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (!(smin > 0.0) || sv(0) / smin > kMaxCondition) {
    std::ostringstream os;
    os << "decoupling matrix dF/dx2 * G is singular (condition "
       << (smin > 0.0 ? sv(0) / smin : INFINITY) << ") at t=" << t;
    throw SingularPlantError(os.str());
  }
  const double norm_p = Eigen::JacobiSVD<MatX>(p.dF_dx2).singularValues()(0);

  VecX bracket = p.dF_dx2 * p.H + p.drift;
  SlidingValue<VecX> s{VecX(), Regime::PrescribedPhase};
  if (spec.regime_at(t) == Regime::PrescribedPhase) {
    const double tau = spec.t_f() - t;
    const double eta = spec.eta();
    s = pt_sliding(x1, p.F, t, spec);
    bracket += ((eta - 1.0) / tau) * p.F + (eta / (tau * tau)) * s.s;
  } else {
    s = {x1 + p.F, Regime::TerminalPhase};
    bracket += p.F + K1 * s.s;
  }
  bracket += (K * norm_p) * switching(s.s, phi);

  return {-M.partialPivLu().solve(bracket), std::move(s)};
}

}  // namespace

void ControlGains::validate() const {
  if (!(K > 0.0) || !std::isfinite(K)) {
    throw DomainError("switching gain K must be positive");
  }
  if (!(K1 > 0.0) || !std::isfinite(K1)) {
    throw DomainError("terminal gain K1 must be positive");
  }
  if (!(phi >= 0.0) || !std::isfinite(phi)) {
    throw DomainError("boundary-layer width phi must be non-negative");
  }
}

ScalarPlant ScalarPlant::double_integrator() {
  return {[](std::span<const double>) { return 0.0; },
          [](std::span<const double>) { return 1.0; }};
}

VectorPlantPoint VectorPlant::evaluate(const VecX& x1, const VecX& x2, double t) const {
  VectorPlantPoint p{F(x1, x2, t), H(x1, x2, t), G(x1, x2, t), dF_dx2(x1, x2, t), VecX()};
  p.drift = dF_dx1(x1, x2, t) * p.F;
  if (dF_dt) {
    p.drift += dF_dt(x1, x2, t);
  }
  return p;
}

double switching(double s, double phi) noexcept {
  if (phi > 0.0) {
    return std::clamp(s / phi, -1.0, 1.0);
  }
  return static_cast<double>((s > 0.0) - (s < 0.0));
}

ScalarControl ptsmc_second_order(std::span<const double> x, double t, const PtSlidingSpec& spec,
                                 const ControlGains& gains, const ScalarPlant& plant) {
  if (spec.order() != 2 || x.size() != 2) {
    throw DomainError("ptsmc_second_order: requires a second-order state and surface");
  }
  gains.validate();
  const double f = plant.f(x);
  const double g_inv = checked_inverse_gain(plant.g(x), t);
  const double x1 = x[0];
  const double x2 = x[1];

  if (spec.regime_at(t) == Regime::PrescribedPhase) {
    const double tau = spec.t_f() - t;
    const double eta = spec.eta();
    const auto s = pt_sliding(x, t, spec);
    const double damping = ((eta - 1.0) * x2) / tau;
    const double reach = (eta * s.s) / (tau * tau);
    return {(-damping - f - gains.K * switching(s.s, gains.phi) - reach) * g_inv, s};
  }
  const double s = x2 + x1;
  return {(-f - gains.K * switching(s, gains.phi) - gains.K1 * s - x2) * g_inv,
          {s, Regime::TerminalPhase}};
}

ScalarControl ptsmc_high_order(std::span<const double> x, double t, const PtSlidingSpec& spec,
                               const ClassicalSurface& surf, const ControlGains& gains,
                               const ScalarPlant& plant) {
  const int n = spec.order();
  if (static_cast<int>(x.size()) != n || surf.order() != n) {
    throw DomainError("ptsmc_high_order: state, surface and spec orders differ");
  }
  gains.validate();
  const double f = plant.f(x);
  const double g_inv = checked_inverse_gain(plant.g(x), t);

  if (spec.regime_at(t) == Regime::PrescribedPhase) {
    const double tau = spec.t_f() - t;
    const auto c = spec.coeffs();
    const auto dc = pt_derivative_coefficients(spec);
    const auto s = pt_sliding(x, t, spec);

    // sum_{i=0}^{n-2} (c_i - (i+1) c_{i+1}) tau^i x_{i+2}
    double numerator = 0.0;
    double p = 1.0;
    for (int i = 0; i + 1 < n; ++i) {
      numerator += (dc[static_cast<std::size_t>(i)] * p) * x[static_cast<std::size_t>(i) + 1];
      p *= tau;
    }
    // p == tau^(n-1) here
    const double damping = numerator / (c[static_cast<std::size_t>(n) - 1] * p);
    const double reach = ((spec.eta() + (n - 2)) * s.s) / (p * tau);
    return {(-damping - f - gains.K * switching(s.s, gains.phi) - reach) * g_inv, s};
  }

  const auto s = classical_sliding(x, surf);
  const auto a = surf.a();
  double chain = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    chain += a[i] * x[i + 1];
  }
  return {(-f - gains.K * switching(s.s, gains.phi) - gains.K1 * s.s - chain) * g_inv, s};
}

VectorControl ptsmc_vector_second_order(const VecX& x1, const VectorPlantPoint& plant, double t,
                                        const PtSlidingSpec& spec, const ControlGains& gains) {
  if (spec.order() != 2) {
    throw DomainError("ptsmc_vector_second_order: requires a second-order surface");
  }
  gains.validate();
  return vector_law(x1, plant, t, spec, gains.K, gains.K1, gains.phi);
}

VectorControl ptsmc_vector_second_order(const VecX& x1, const VecX& x2, double t,
                                        const PtSlidingSpec& spec, const ControlGains& gains,
                                        const VectorPlant& plant) {
  return ptsmc_vector_second_order(x1, plant.evaluate(x1, x2, t), t, spec, gains);
}

AttitudeControl attitude_ptsmc(const AttitudeState& state, const AttitudeReference& ref,
                               const Vec3& d_hat, double K2, double t, const PtSlidingSpec& spec,
                               const ControlGains& gains, const RigidBody& body) {
  if (spec.order() != 2) {
    throw DomainError("attitude_ptsmc: requires a second-order surface");
  }
  if (!(K2 >= 0.0)) {
    throw DomainError("attitude_ptsmc: K2 must be non-negative");
  }
  if (!(gains.K1 > 0.0) || !(gains.phi >= 0.0)) {
    throw DomainError("attitude_ptsmc: K1 must be positive and phi non-negative");
  }
  const Quaternion& q = state.q;
  if (!(std::abs(q.s()) >= kAttitudeSingularityGuard)) {
    std::ostringstream os;
    os << "attitude singularity: |q4| = " << std::abs(q.s()) << " below "
       << kAttitudeSingularityGuard << " at t=" << t;
    throw AttitudeSingularityError(os.str());
  }

  const ReferenceSample r = ref.at(t);
  const Vec3& w = state.w;
  const Mat3& J = body.inertia();
  const Mat3& J_inv = body.inertia_inverse();
  const Mat3 half_T = 0.5 * t_matrix(q);
  const QuaternionRate q_dot = kinematics_rate(q, w);
  const Mat3 T_dot = t_matrix(Quaternion::unchecked(q_dot.v_dot, q_dot.s_dot));

  VectorPlantPoint p;
  p.F = half_T * w - r.q1f_dot;
  p.H = J_inv * (-w.cross(J * w) + d_hat);
  p.G = J_inv;
  p.dF_dx2 = half_T;
  p.drift = 0.5 * T_dot * w - r.q1f_ddot;

  const VecX eps1 = q.v() - r.q1f;
  VectorControl vc = vector_law(eps1, p, t, spec, K2, gains.K1, gains.phi);
  return {Vec3(vc.u), {Vec3(vc.s.s), vc.s.regime}};
}

}  // namespace ptsmc
