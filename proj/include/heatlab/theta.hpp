// SPDX-License-Identifier: Apache-2.0
//
// Jacobi partial theta function F_{d,l}(z; tau) = sum_{n>=0} zeta^{ln+d}
// q^{(ln+d)^2} with zeta = e^{2 pi i z}, q = e^{2 pi i tau}, its z-derivative,
// and its small-|tau| expansion in Bernoulli polynomials (valid for
// |z| < 1/(4l)).

#ifndef HEATLAB_THETA_HPP
#define HEATLAB_THETA_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "heatlab/errors.hpp"
#include "heatlab/gamma.hpp"
#include "heatlab/specfun.hpp"

namespace heatlab {

struct ThetaParams {
  double d = 0.0;                   // nonnegative rational offset
  int ell = 1;                      // positive integer step
  std::complex<double> z{0.0, 0.0};
  std::complex<double> tau{0.0, 1.0};  // upper half-plane
};

struct ComplexSeriesValue {
  std::complex<double> value{0.0, 0.0};
  double error_bound = 0.0;
  int terms_used = 0;
};

namespace detail {

inline void validate_theta(const ThetaParams& p) {
  if (p.d < 0.0) throw DomainError("partial_theta: d must be nonnegative");
  if (p.ell < 1) throw DomainError("partial_theta: ell must be positive");
  if (!(p.tau.imag() > 0.0))
    throw NonConvergent("partial_theta: requires Im(tau) > 0 (|q| < 1)");
}

}  // namespace detail

/// Truncated partial theta sum with a certified geometric tail bound.
inline ComplexSeriesValue partial_theta(const ThetaParams& p, int n_max) {
  detail::validate_theta(p);
  if (n_max < 0) throw DomainError("partial_theta: n_max must be nonnegative");
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  std::complex<double> sum{0.0, 0.0};
  for (int n = 0; n <= n_max; ++n) {
    const double x = p.ell * static_cast<double>(n) + p.d;
    sum += std::exp(two_pi_i * (p.z * x + p.tau * (x * x)));
  }
  // first omitted term magnitude and a geometric ratio bound for the rest
  const double X = p.ell * (n_max + 1.0) + p.d;
  const double log_u = -2.0 * std::numbers::pi * (p.z.imag() * X + p.tau.imag() * X * X);
  const double log_rho =
      -2.0 * std::numbers::pi * (p.z.imag() * p.ell + p.tau.imag() * p.ell * (2.0 * X + p.ell));
  if (log_rho >= 0.0)
    throw NonConvergent("partial_theta: tail not yet geometric at this n_max");
  const double bound = std::exp(log_u) / (1.0 - std::exp(log_rho));
  return {sum, bound, n_max + 1};
}

/// Term-wise z-derivative F'_{d,l}(z; tau) = 2 pi i sum (ln+d) zeta^{ln+d} q^{(ln+d)^2}.
inline ComplexSeriesValue partial_theta_deriv(const ThetaParams& p, int n_max) {
  detail::validate_theta(p);
  if (n_max < 0) throw DomainError("partial_theta_deriv: n_max must be nonnegative");
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  std::complex<double> sum{0.0, 0.0};
  for (int n = 0; n <= n_max; ++n) {
    const double x = p.ell * static_cast<double>(n) + p.d;
    sum += x * std::exp(two_pi_i * (p.z * x + p.tau * (x * x)));
  }
  sum *= two_pi_i;
  const double X = p.ell * (n_max + 1.0) + p.d;
  const double log_u = -2.0 * std::numbers::pi * (p.z.imag() * X + p.tau.imag() * X * X);
  const double log_rho =
      -2.0 * std::numbers::pi * (p.z.imag() * p.ell + p.tau.imag() * p.ell * (2.0 * X + p.ell));
  const double ratio_growth = (X + p.ell) / X;  // extra factor from the (ln+d) weight
  const double rho = ratio_growth * std::exp(log_rho);
  if (rho >= 1.0)
    throw NonConvergent("partial_theta_deriv: tail not yet geometric at this n_max");
  const double bound = 2.0 * std::numbers::pi * X * std::exp(log_u) / (1.0 - rho);
  return {sum, bound, n_max + 1};
}

/// As partial_theta, but grows n_max until the certified tail is <= tol.
inline ComplexSeriesValue partial_theta_adaptive(const ThetaParams& p, double tol,
                                                 int n_cap = kSeriesTermCap) {
  detail::validate_theta(p);
  for (int n_max = 8; n_max <= n_cap; n_max *= 2) {
    try {
      ComplexSeriesValue v = partial_theta(p, n_max);
      if (v.error_bound <= tol) return v;
    } catch (const NonConvergent&) {
      // ratio not yet < 1; enlarge
    }
  }
  throw NonConvergent("partial_theta_adaptive: term cap exceeded");
}

inline ComplexSeriesValue partial_theta_deriv_adaptive(const ThetaParams& p, double tol,
                                                       int n_cap = kSeriesTermCap) {
  detail::validate_theta(p);
  for (int n_max = 8; n_max <= n_cap; n_max *= 2) {
    try {
      ComplexSeriesValue v = partial_theta_deriv(p, n_max);
      if (v.error_bound <= tol) return v;
    } catch (const NonConvergent&) {
    }
  }
  throw NonConvergent("partial_theta_deriv_adaptive: term cap exceeded");
}

/// Small-|tau| expansion of F_{d,l}(z; tau) truncated at order N in tau,
/// stored as coefficients c_j of powers (2 pi i l z)^j:
///
///   c_j = (1/j!) [ Gamma((j+1)/2) / (2 (-2 pi i l^2 tau)^{(j+1)/2})
///                  - sum_{k=0}^{N} (2 pi i l^2 tau)^k / k!
///                    B_{2k+j+1}(d/l) / (2k+j+1) ]
///
/// The j-sum is truncated adaptively by worst-case term magnitude on the
/// disk |z| < 1/(4l) where the expansion is valid.
struct ThetaExpansion {
  double d = 0.0;
  int ell = 1;
  int order = 0;  // N
  std::complex<double> tau{0.0, 1.0};
  std::vector<std::complex<double>> coeffs;

  std::complex<double> eval(std::complex<double> z) const {
    if (std::abs(z) >= 1.0 / (4.0 * ell))
      throw DomainError("ThetaExpansion::eval: requires |z| < 1/(4 ell)");
    const std::complex<double> w =
        std::complex<double>(0.0, 2.0 * std::numbers::pi * ell) * z;
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> wj{1.0, 0.0};
    for (const auto& c : coeffs) {
      sum += c * wj;
      wj *= w;
    }
    return sum;
  }
};

inline ThetaExpansion partial_theta_expansion(double d, int ell, int N,
                                              std::complex<double> tau) {
  if (d < 0.0) throw DomainError("partial_theta_expansion: d must be nonnegative");
  if (ell < 1) throw DomainError("partial_theta_expansion: ell must be positive");
  if (N < 0) throw DomainError("partial_theta_expansion: N must be nonnegative");
  if (!(tau.imag() > 0.0))
    throw DomainError("partial_theta_expansion: requires Im(tau) > 0");

  // Bernoulli indices reach 2N + j + 1; the table stops at 60.
  const int j_cap = 59 - 2 * N;
  if (j_cap < 1)
    throw DomainError("partial_theta_expansion: order too large for Bernoulli table");

  const std::complex<double> v =
      std::complex<double>(0.0, 2.0 * std::numbers::pi * ell * ell) * tau;
  const double ratio = d / ell;

  ThetaExpansion exp_out;
  exp_out.d = d;
  exp_out.ell = ell;
  exp_out.order = N;
  exp_out.tau = tau;

  // worst-case |w| on the validity disk: |2 pi i l z| < pi/2
  const double w_edge = std::numbers::pi / 2.0;
  double scale = 0.0;
  int quiet = 0;
  for (int j = 0; j <= j_cap; ++j) {
    const std::complex<double> lead =
        gamma_fn((j + 1) / 2.0) / (2.0 * std::pow(-v, (j + 1) / 2.0));
    std::complex<double> corr{0.0, 0.0};
    std::complex<double> vk{1.0, 0.0};
    for (int k = 0; k <= N; ++k) {
      corr += vk / factorial(k) * bernoulli_polynomial(2 * k + j + 1, ratio) /
              static_cast<double>(2 * k + j + 1);
      vk *= v;
    }
    const std::complex<double> cj = (lead - corr) / factorial(j);
    exp_out.coeffs.push_back(cj);
    const double mag = std::abs(cj) * std::pow(w_edge, j);
    scale = std::max(scale, mag);
    if (j > 4 && mag <= 1e-17 * scale) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  return exp_out;
}

}  // namespace heatlab

#endif  // HEATLAB_THETA_HPP
