#pragma once

// Test-only reference computations. Nothing here calls into the library's
// coefficient or Routh-Hurwitz code.

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace ptsmc::oracle {

/// (n-1)-th derivative of x1(tau) / (t_f - tau)^eta at tau = t, rescaled by
/// (t_f - t)^(eta + n - 1), where x1 is the Taylor polynomial whose
/// derivatives at t are `x` (x[k] = x1^(k)(t)).
///
/// Central differences of order m = n-1 with three levels of Richardson
/// extrapolation, evaluated in long double.
inline double sliding_by_finite_differences(const std::vector<double>& x, double t, double t_f,
                                            double eta, double h0 = 0.2) {
  using ld = long double;
  const int n = static_cast<int>(x.size());
  const int m = n - 1;

  const auto phi = [&](ld tau) {
    ld poly = 0.0L;
    ld p = 1.0L;
    ld fact = 1.0L;
    for (int k = 0; k < n; ++k) {
      if (k > 0) {
        p *= tau - t;
        fact *= k;
      }
      poly += static_cast<ld>(x[static_cast<std::size_t>(k)]) * p / fact;
    }
    return poly / std::pow(static_cast<ld>(t_f) - tau, static_cast<ld>(eta));
  };

  const auto central = [&](ld h) {
    if (m == 0) {
      return phi(t);
    }
    ld sum = 0.0L;
    ld binom = 1.0L;
    for (int k = 0; k <= m; ++k) {
      const ld offset = (static_cast<ld>(m) / 2.0L - k) * h;
      sum += ((k % 2 == 0) ? 1.0L : -1.0L) * binom * phi(static_cast<ld>(t) + offset);
      binom = binom * (m - k) / (k + 1);
    }
    return sum / std::pow(h, static_cast<ld>(m));
  };

  constexpr int kLevels = 4;
  ld table[kLevels][kLevels];
  ld h = h0;
  for (int i = 0; i < kLevels; ++i, h /= 2.0L) {
    table[i][0] = central(h);
    ld factor = 4.0L;
    for (int j = 1; j <= i; ++j, factor *= 4.0L) {
      table[i][j] = (factor * table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0L);
    }
  }
  const ld deriv = table[kLevels - 1][kLevels - 1];
  return static_cast<double>(deriv * std::pow(static_cast<ld>(t_f - t), static_cast<ld>(eta + m)));
}

/// Largest real part among the roots of lambda^m + a_m lambda^(m-1) + ... + a_1,
/// via eigenvalues of its companion matrix.
inline double max_root_real_part(const std::vector<double>& a) {
  const auto m = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    C(i, i + 1) = 1.0;
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    C(m - 1, j) = -a[static_cast<std::size_t>(j)];
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  return es.eigenvalues().real().maxCoeff();
}

}  // namespace ptsmc::oracle
