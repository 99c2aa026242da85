#pragma once

#include "ptsmc/scenario.hpp"
#include "ptsmc/sliding.hpp"

namespace ptsmc {

struct EnvelopeReport {
  double max_violation;  ///< max over prescribed-phase samples of ||s|| - envelope
  double v0;             ///< 1/2 ||s(0)||^2
  double tolerance;      ///< 1e-2 sqrt(2 V0)
  std::size_t samples;   ///< prescribed-phase samples inspected
  bool pass;
};

/// sqrt(2 V0) ((t_f - t) / t_f)^eta for t < t_f, 0 afterwards.
[[nodiscard]] double envelope_bound(double v0, double t, double t_f, double eta) noexcept;

/// Checks the Lyapunov decay envelope on the prescribed phase. V0 is taken from
/// the recorded s at the first sample. Passes iff max_violation <= 1e-2 sqrt(2 V0).
/// Throws DomainError on an empty trajectory.
[[nodiscard]] EnvelopeReport envelope_check(const Trajectory& traj, const PtSlidingSpec& spec);

/// Largest ratio |s| / envelope over prescribed-phase samples with a positive
/// envelope; <= 1 + rel_tol is the relative form of the envelope property.
[[nodiscard]] double envelope_ratio(const Trajectory& traj, const PtSlidingSpec& spec);

struct ObserverBoundReport {
  double max_violation;  ///< max of ||d_hat - d||_inf - factor * K2
  double max_ratio;      ///< max of ||d_hat - d||_inf / K2
  bool pass;
};

/// Checks ||d_hat - d||_inf <= factor * K2(t) for every sample after the first.
[[nodiscard]] ObserverBoundReport observer_bound_check(const Trajectory& traj,
                                                       double factor = 1.2);

}  // namespace ptsmc
