#include "ptsmc/envelope.hpp"

#include <algorithm>
#include <cmath>

#include "ptsmc/errors.hpp"

namespace ptsmc {

double envelope_bound(double v0, double t, double t_f, double eta) noexcept {
  if (t >= t_f) {
    return 0.0;
  }
  return std::sqrt(2.0 * v0) * std::pow((t_f - t) / t_f, eta);
}

EnvelopeReport envelope_check(const Trajectory& traj, const PtSlidingSpec& spec) {
  if (traj.empty()) {
    throw DomainError("envelope_check: empty trajectory");
  }
  const double v0 = 0.5 * traj.sliding.front().squaredNorm();
  const double scale = std::sqrt(2.0 * v0);
  EnvelopeReport rep{-INFINITY, v0, 1e-2 * scale, 0, false};
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = traj.times[i];
    if (spec.regime_at(t) != Regime::PrescribedPhase) {
      continue;
    }
    const double bound = envelope_bound(v0, t, spec.t_f(), spec.eta());
    rep.max_violation = std::max(rep.max_violation, traj.sliding[i].norm() - bound);
    ++rep.samples;
  }
  if (rep.samples == 0) {
    throw DomainError("envelope_check: trajectory has no prescribed-phase samples");
  }
  rep.pass = rep.max_violation <= rep.tolerance;
  return rep;
}

double envelope_ratio(const Trajectory& traj, const PtSlidingSpec& spec) {
  if (traj.empty()) {
    throw DomainError("envelope_ratio: empty trajectory");
  }
  const double v0 = 0.5 * traj.sliding.front().squaredNorm();
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = traj.times[i];
    if (spec.regime_at(t) != Regime::PrescribedPhase) {
      continue;
    }
    const double bound = envelope_bound(v0, t, spec.t_f(), spec.eta());
    const double s = traj.sliding[i].norm();
    if (bound > 0.0) {
      worst = std::max(worst, s / bound);
    } else if (s > 0.0) {
      return INFINITY;
    }
  }
  return worst;
}

ObserverBoundReport observer_bound_check(const Trajectory& traj, double factor) {
  if (traj.d_hat.size() != traj.size() || traj.k2.size() != traj.size()) {
    throw DomainError("observer_bound_check: trajectory has no observer record");
  }
  ObserverBoundReport rep{-INFINITY, 0.0, true};
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const double err = (traj.d_hat[i] - traj.disturbance[i]).cwiseAbs().maxCoeff();
    const double k2 = traj.k2[i];
    rep.max_violation = std::max(rep.max_violation, err - factor * k2);
    rep.max_ratio = std::max(rep.max_ratio, k2 > 0.0 ? err / k2 : (err > 0.0 ? INFINITY : 0.0));
  }
  rep.pass = rep.max_violation <= 0.0;
  return rep;
}

}  // namespace ptsmc
