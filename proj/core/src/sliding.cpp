#include "ptsmc/sliding.hpp"

#include <cmath>
#include <sstream>

#include "ptsmc/errors.hpp"

namespace ptsmc {

namespace {

void require_prescribed(double t, const PtSlidingSpec& spec) {
  if (spec.regime_at(t) != Regime::PrescribedPhase) {
    std::ostringstream os;
    os << "prescribed-time sliding variable requested at t=" << t
       << " >= t_f - delta = " << spec.switch_time();
    throw WrongRegimeError(os.str());
  }
}

}  // namespace

std::vector<double> pt_coefficients(int n, double eta) {
  if (n < 2) {
    throw DomainError("pt_coefficients: order must be at least 2");
  }
  if (!(eta > n)) {
    std::ostringstream os;
    os << "pt_coefficients: eta must exceed the order (eta=" << eta << ", n=" << n << ")";
    throw DomainError(os.str());
  }
  // Leibniz rule on x1 * (t_f - t)^-eta: the k-th derivative of the power
  // contributes the rising factorial eta (eta+1) ... (eta+k-1).
  std::vector<double> c(static_cast<std::size_t>(n));
  double binom = 1.0;
  for (int i = n - 1; i >= 0; --i) {
    const int k = n - 1 - i;  // derivative order falling on the power term
    double rising = 1.0;
    for (int j = 0; j < k; ++j) {
      rising *= eta + j;
    }
    c[static_cast<std::size_t>(i)] = binom * rising;
    binom = binom * (n - 1 - k) / (k + 1);  // binom(n-1, i-1) from binom(n-1, i)
  }
  return c;
}

PtSlidingSpec::PtSlidingSpec(int order, double eta, double t_f, double delta)
    : order_(order), eta_(eta), t_f_(t_f), delta_(delta) {
  if (!(t_f > 0.0) || !std::isfinite(t_f)) {
    throw DomainError("prescribed time t_f must be positive");
  }
  if (!(delta >= 0.0) || !(delta < t_f)) {
    throw DomainError("switch margin delta must satisfy 0 <= delta < t_f");
  }
  coeffs_ = pt_coefficients(order, eta);
}

ClassicalSurface::ClassicalSurface(std::vector<double> a) : a_(std::move(a)) {
  if (a_.empty()) {
    throw DomainError("classical surface needs at least one coefficient");
  }
  if (!is_hurwitz(a_)) {
    throw DomainError("classical surface coefficients are not Hurwitz");
  }
}

std::vector<double> pt_derivative_coefficients(const PtSlidingSpec& spec) {
  const auto c = spec.coeffs();
  const std::size_t n = c.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out[i] = c[i] - c[i + 1] * static_cast<double>(i + 1);
  }
  out[n - 1] = c[n - 1];
  return out;
}

SlidingValue<double> pt_sliding(std::span<const double> x, double t, const PtSlidingSpec& spec) {
  if (static_cast<int>(x.size()) != spec.order()) {
    throw DomainError("pt_sliding: state size does not match the surface order");
  }
  require_prescribed(t, spec);
  const auto c = spec.coeffs();
  const double tau = spec.t_f() - t;
  double s = 0.0;
  double p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += c[i] * p * x[i];
    p *= tau;
  }
  return {s, Regime::PrescribedPhase};
}

SlidingValue<VecX> pt_sliding(const VecX& x1, const VecX& x1_dot, double t,
                              const PtSlidingSpec& spec) {
  if (spec.order() != 2) {
    throw DomainError("vector sliding variable requires a second-order surface");
  }
  if (x1.size() != x1_dot.size()) {
    throw DomainError("pt_sliding: x1 and x1_dot sizes differ");
  }
  require_prescribed(t, spec);
  const auto c = spec.coeffs();
  return {c[1] * (spec.t_f() - t) * x1_dot + c[0] * x1, Regime::PrescribedPhase};
}

SlidingValue<double> classical_sliding(std::span<const double> x, const ClassicalSurface& surf) {
  const auto a = surf.a();
  if (x.size() != a.size() + 1) {
    throw DomainError("classical_sliding: state size does not match the surface order");
  }
  double s = x.back();
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * x[i];
  }
  return {s, Regime::TerminalPhase};
}

bool is_hurwitz(std::span<const double> a) {
  const std::size_t m = a.size();
  if (m == 0) {
    return true;  // constant polynomial 1 has no roots
  }
  // Polynomial coefficients in descending powers: 1, a_m, a_{m-1}, ..., a_1.
  std::vector<double> p(m + 1);
  p[0] = 1.0;
  for (std::size_t k = 1; k <= m; ++k) {
    p[k] = a[m - k];
  }
  for (double v : p) {
    if (!std::isfinite(v)) {
      return false;
    }
  }

  // Routh array, two rows at a time. Strict stability requires every entry of
  // the first column to be positive; a zero pivot already means a root on or
  // right of the imaginary axis.
  const std::size_t width = m / 2 + 1;
  std::vector<double> upper(width, 0.0);
  std::vector<double> lower(width, 0.0);
  for (std::size_t k = 0; k <= m; ++k) {
    (k % 2 == 0 ? upper : lower)[k / 2] = p[k];
  }
  if (!(upper[0] > 0.0)) {
    return false;
  }
  for (std::size_t row = 1; row <= m; ++row) {
    if (!(lower[0] > 0.0)) {
      return false;
    }
    std::vector<double> next(width, 0.0);
    for (std::size_t j = 0; j + 1 < width; ++j) {
      next[j] = (lower[0] * upper[j + 1] - upper[0] * lower[j + 1]) / lower[0];
    }
    upper = std::move(lower);
    lower = std::move(next);
  }
  return true;
}

MatX companion_matrix(std::span<const double> a) {
  const auto m = static_cast<Eigen::Index>(a.size());
  MatX A = MatX::Zero(m, m);
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    A(i, i + 1) = 1.0;
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    A(m - 1, j) = -a[static_cast<std::size_t>(j)];
  }
  return A;
}

}  // namespace ptsmc
