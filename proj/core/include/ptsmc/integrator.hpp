#pragma once

#include <cmath>
#include <sstream>

#include "ptsmc/errors.hpp"
#include "ptsmc/types.hpp"

namespace ptsmc {

namespace detail {

inline bool all_finite(double x) noexcept { return std::isfinite(x); }

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& x) {
  return x.allFinite();
}

template <typename State>
void require_finite(const State& k, double t, const char* stage) {
  if (!all_finite(k)) {
    std::ostringstream os;
    os << "non-finite state rate in RK4 stage " << stage << " at t=" << t;
    throw NumericalBlowupError(os.str(), t);
  }
}

}  // namespace detail

/// One classical fourth-order Runge-Kutta step of x' = rate(t, x).
///
/// `rate` is called four times (t, t+dt/2, t+dt/2, t+dt), so a controller
/// evaluated inside it is re-evaluated at every stage. Throws
/// NumericalBlowupError if any stage rate is non-finite.
template <typename State, typename Rate>
[[nodiscard]] State rk4_step(Rate&& rate, const State& x, double t, double dt) {
  if (!(dt > 0.0)) {
    throw DomainError("rk4_step: dt must be positive");
  }
  const double half = 0.5 * dt;
  const State k1 = rate(t, x);
  detail::require_finite(k1, t, "1");
  const State k2 = rate(t + half, State(x + half * k1));
  detail::require_finite(k2, t + half, "2");
  const State k3 = rate(t + half, State(x + half * k2));
  detail::require_finite(k3, t + half, "3");
  const State k4 = rate(t + dt, State(x + dt * k3));
  detail::require_finite(k4, t + dt, "4");
  return State(x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

}  // namespace ptsmc
