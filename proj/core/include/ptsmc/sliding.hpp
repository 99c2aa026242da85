#pragma once

#include <span>
#include <vector>

#include "ptsmc/types.hpp"

namespace ptsmc {

/// Prescribed-time sliding surface of order n.
///
/// The surface is the (n-1)-th time derivative of x1 / (t_f - t)^eta, rescaled
/// by (t_f - t)^(eta + n - 1). Expanded, it is a weighted sum of the state
/// chain x1, x1', ..., x1^(n-1) with weights c_i (t_f - t)^i; the c_i are
/// computed once at construction.
class PtSlidingSpec {
public:
  /// Throws DomainError unless n >= 2, eta > n, t_f > 0 and 0 <= delta < t_f.
  PtSlidingSpec(int order, double eta, double t_f, double delta);

  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] double eta() const noexcept { return eta_; }
  [[nodiscard]] double t_f() const noexcept { return t_f_; }
  [[nodiscard]] double delta() const noexcept { return delta_; }
  [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }

  /// The instant the law switches from the prescribed to the terminal phase.
  [[nodiscard]] double switch_time() const noexcept { return t_f_ - delta_; }
  [[nodiscard]] Regime regime_at(double t) const noexcept {
    return t < switch_time() ? Regime::PrescribedPhase : Regime::TerminalPhase;
  }

private:
  int order_;
  double eta_;
  double t_f_;
  double delta_;
  std::vector<double> coeffs_;
};

/// Coefficients a_1..a_{n-1} of the terminal-phase surface s = x_n + sum a_i x_i.
class ClassicalSurface {
public:
  /// Throws DomainError if `a` is empty or its companion matrix is not Hurwitz.
  explicit ClassicalSurface(std::vector<double> a);

  /// The surface s = x1 + x2 used by every second-order law.
  static ClassicalSurface second_order() { return ClassicalSurface({1.0}); }

  [[nodiscard]] std::span<const double> a() const noexcept { return a_; }
  [[nodiscard]] int order() const noexcept { return static_cast<int>(a_.size()) + 1; }

private:
  std::vector<double> a_;
};

/// c_i = binom(n-1, i) * eta (eta+1) ... (eta+n-2-i); c_{n-1} = 1.
/// Throws DomainError for n < 2 or eta <= n.
[[nodiscard]] std::vector<double> pt_coefficients(int n, double eta);

/// Coefficients of s_dot in the state chain: (c_i - (i+1) c_{i+1}) for
/// i = 0..n-2 multiply (t_f-t)^i x_{i+2}; the trailing c_{n-1} multiplies
/// (t_f-t)^(n-1) x1^(n).
[[nodiscard]] std::vector<double> pt_derivative_coefficients(const PtSlidingSpec& spec);

/// Scalar prescribed-time sliding variable. x holds x1, x1', ..., x1^(n-1).
/// Throws WrongRegimeError when t >= t_f - delta.
[[nodiscard]] SlidingValue<double> pt_sliding(std::span<const double> x, double t,
                                              const PtSlidingSpec& spec);

/// Componentwise second-order form s = (t_f - t) x1_dot + eta x1.
[[nodiscard]] SlidingValue<VecX> pt_sliding(const VecX& x1, const VecX& x1_dot, double t,
                                            const PtSlidingSpec& spec);

/// s = x_n + sum_{i=1}^{n-1} a_i x_i.
[[nodiscard]] SlidingValue<double> classical_sliding(std::span<const double> x,
                                                     const ClassicalSurface& surf);

/// Routh-Hurwitz test on lambda^m + a_m lambda^(m-1) + ... + a_1 (m = a.size()).
/// True iff every root lies strictly in the open left half plane.
[[nodiscard]] bool is_hurwitz(std::span<const double> a);

/// Companion matrix of the terminal-phase surface: ones on the superdiagonal,
/// last row -a_1 ... -a_m.
[[nodiscard]] MatX companion_matrix(std::span<const double> a);

}  // namespace ptsmc
