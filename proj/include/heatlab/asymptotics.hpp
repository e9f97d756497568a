// SPDX-License-Identifier: Apache-2.0
//
// Small-t expansion coefficients: the toy-model resummation, the AB disk and
// cylinder/annulus coefficients (including the convergent lattice sums), the
// constant-field disk polynomials C, D and the series-built coefficients E, F
// feeding the relative-trace expansion with its t^3 log t term, the sphere
// re-expansion and the oscillator expansions.

#ifndef HEATLAB_ASYMPTOTICS_HPP
#define HEATLAB_ASYMPTOTICS_HPP

#include <cmath>
#include <numbers>
#include <utility>

#include "heatlab/errors.hpp"
#include "heatlab/expansion.hpp"
#include "heatlab/models.hpp"
#include "heatlab/spectra.hpp"
#include "heatlab/specfun.hpp"
#include "heatlab/util.hpp"

namespace heatlab {

/// Expansion of sum_{n>=1} exp(-t (n + alpha + beta/n)) through O(t^3).
inline Expansion toy_expansion(double alpha, double beta) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  Expansion e;
  e.add(Power(-1), false, 1.0);
  e.add(Power(0), false, -(alpha + 0.5));
  e.add(Power(1), true, beta);
  e.add(Power(1), false, (1.0 + 6.0 * alpha + 6.0 * alpha * alpha) / 12.0);
  e.add(Power(2), true, -alpha * beta);
  e.add(Power(2), false,
        -(alpha + 3.0 * alpha * alpha + 2.0 * alpha * alpha * alpha + 6.0 * beta -
          beta * beta * pi2) /
            12.0);
  e.set_remainder(Power(3));
  return e;
}

/// AB disk trace expansion 2/t + (1/6 - nu + nu^2) t + O(t^3).
inline Expansion ab_disk_expansion(double nu) {
  if (!(nu >= 0.0 && nu < 1.0))
    throw DomainError("ab_disk_expansion: nu must lie in [0,1)");
  Expansion e;
  e.model = ModelSpec(AbDisk(nu));
  e.add(Power(-1), false, 2.0);
  e.add(Power(1), false, 1.0 / 6.0 - nu + nu * nu);
  e.set_remainder(Power(3));
  return e;
}

namespace detail {

/// sum over k in Z of f(|k - nu|) where f(x) <= amp * x * e^{-rate*x}
/// for x >= 1 (certified geometric majorant with linear weight).
template <typename F>
double flux_lattice_sum(double nu, double rate, double amp, double tol, F&& f) {
  double sum = f(std::abs(-nu));  // k = 0
  for (long k = 1;; ++k) {
    sum += f(std::abs(static_cast<double>(k) - nu));
    sum += f(std::abs(static_cast<double>(-k) - nu));
    // indices j > k contribute at most 2 amp (j+1) e^{-rate (j-1)} each side
    const double ratio = (static_cast<double>(k) + 3.0) / (k + 2.0) * std::exp(-rate);
    if (ratio < 1.0) {
      const double head = 2.0 * amp * (k + 2.0) * std::exp(-rate * k);
      const double tail = head / (1.0 - ratio);
      if (tail <= tol) return sum;
    }
    if (k > 1000000) throw NonConvergent("flux_lattice_sum: term cap exceeded");
  }
}

}  // namespace detail

/// Cylinder coefficient a1(nu) = sum_k |k-nu| (coth(2|k-nu|) - 1).
inline double cylinder_a1(double nu, double tol = 1e-12) {
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError("cylinder_a1: nu must lie in (0,1)");
  auto f = [](double x) { return x == 0.0 ? 0.0 : x * coth_minus_one(2.0 * x); };
  // x(coth 2x - 1) = 2x/(e^{4x}-1) <= [2/(1-e^{-4})] x e^{-4x} for x >= 1
  const double amp = 2.0 / (1.0 - std::exp(-4.0));
  return detail::flux_lattice_sum(nu, 4.0, amp, tol, f);
}

/// Cylinder expansion coefficients a_p^+ and a_p^- of Eq-style remainder
/// sums ((-1)^p/p!) sum_k ((lambda_k^pm)^p - |k-nu|^p), p <= 12.
inline std::pair<double, double> cylinder_ap(double nu, int p, double tol = 1e-12) {
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError("cylinder_ap: nu must lie in (0,1)");
  if (p < 1 || p > 12) throw DomainError("cylinder_ap: requires 1 <= p <= 12");
  auto plus_term = [p](double x) {
    if (x == 0.0) return 0.0;
    return std::pow(x, p) * std::expm1(p * std::log1p(coth_minus_one(x)));
  };
  auto minus_term = [p](double x) {
    if (x == 0.0) return 0.0;
    const double delta = 2.0 / (std::exp(2.0 * x) + 1.0);  // 1 - tanh(x)
    return std::pow(x, p) * std::expm1(p * std::log1p(-delta));
  };
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  const double fact = factorial(p);

  // |lambda^p - x^p| <= p (x+1)^{p-1} |lambda - x| <= amp (x+1)^p e^{-2x}
  // with amp = 2p/(1 - e^{-2}) for x >= 1; at index j both sides satisfy
  // x >= j-1, x+1 <= j+2.
  double sp = plus_term(nu);
  double sm = minus_term(nu);
  const double amp = 2.0 * p / (1.0 - std::exp(-2.0));
  for (long k = 1;; ++k) {
    for (double x : {std::abs(static_cast<double>(k) - nu),
                     std::abs(static_cast<double>(-k) - nu)}) {
      sp += plus_term(x);
      sm += minus_term(x);
    }
    const double ratio =
        std::pow((static_cast<double>(k) + 4.0) / (k + 3.0), p) * std::exp(-2.0);
    if (k >= p && ratio < 1.0) {
      const double head =
          2.0 * amp * std::pow(k + 3.0, p) * std::exp(-2.0 * static_cast<double>(k));
      const double tail = head / (1.0 - ratio);
      if (tail <= tol * fact) break;
    }
    if (k > 1000000) throw NonConvergent("cylinder_ap: term cap exceeded");
  }
  return {sign * sp / fact, sign * sm / fact};
}

/// Annulus full-map coefficient a1(R, nu) = -(1 + 1/R) sum_m |m-nu| (coth(a|m-nu|) - 1).
inline double annulus_a1(double nu, double R, double tol = 1e-12,
                         bool* slow_convergence = nullptr) {
  if (!(R > 0.0 && R < 1.0)) throw DomainError("annulus_a1: R must lie in (0,1)");
  if (!(nu >= 0.0 && nu < 1.0)) throw DomainError("annulus_a1: nu must lie in [0,1)");
  const double a = -std::log(R);
  if (slow_convergence) *slow_convergence = a < 0.1;
  auto f = [a](double x) { return x == 0.0 ? 0.0 : x * coth_minus_one(a * x); };
  const double amp = 2.0 / (1.0 - std::exp(-2.0 * a));
  const double scale = 1.0 + 1.0 / R;
  return -scale * detail::flux_lattice_sum(nu, 2.0 * a, amp, tol / scale, f);
}

/// Partial-map coefficient: same lattice sum without the boundary factor.
inline double annulus_partial_a1(double nu, double R, double tol = 1e-12,
                                 bool* slow_convergence = nullptr) {
  if (!(R > 0.0 && R < 1.0))
    throw DomainError("annulus_partial_a1: R must lie in (0,1)");
  if (!(nu >= 0.0 && nu < 1.0))
    throw DomainError("annulus_partial_a1: nu must lie in [0,1)");
  const double a = -std::log(R);
  if (slow_convergence) *slow_convergence = a < 0.1;
  auto f = [a](double x) { return x == 0.0 ? 0.0 : x * coth_minus_one(a * x); };
  const double amp = 2.0 / (1.0 - std::exp(-2.0 * a));
  return -detail::flux_lattice_sum(nu, 2.0 * a, amp, tol, f);
}

/// Three-term eigenvalue asymptote mu_n(b) of the constant-field disk.
inline double const_field_mu(long n, double b) {
  if (n < 1) throw DomainError("const_field_mu: n must be >= 1");
  const double dn = static_cast<double>(n);
  return dn - b +
         2.0 * b *
             (1.0 / (2.0 * dn) + (b - 1.0) / (2.0 * dn * dn) +
              (2.0 * b * b - 7.0 * b + 2.0) / (4.0 * dn * dn * dn));
}

/// lambda_n(b) - mu_n(b), evaluated as 2b (M'/M - polynomial) so that the
/// O(|b|/n^4) difference survives in double precision.
inline double const_field_lambda_minus_mu(long n, double b, double kummer_tol = 1e-15) {
  if (n < 1) throw DomainError("const_field_lambda_minus_mu: n must be >= 1");
  if (b == 0.0) return 0.0;
  const double dn = static_cast<double>(n);
  const double c = dn + 1.0;
  const SeriesValue m = kummer_m(0.5, c, b, kummer_tol);
  if (m.value <= 0.0)
    throw DenominatorVanishes("const_field_lambda_minus_mu: M(1/2, n+1, b) <= 0");
  const SeriesValue mp = kummer_m_deriv(0.5, c, b, 1, kummer_tol);
  const double poly = 1.0 / (2.0 * dn) + (b - 1.0) / (2.0 * dn * dn) +
                      (2.0 * b * b - 7.0 * b + 2.0) / (4.0 * dn * dn * dn);
  return 2.0 * b * (mp.value / m.value - poly);
}

namespace detail {

/// sum_{n>=1} (lambda_n(b) - mu_n(b)); summands scale like |b|/n^4, the
/// tail is estimated from the largest observed n^4-normalized summand.
inline double lambda_mu_sum(double b, double tol) {
  if (b == 0.0) return 0.0;
  double sum = 0.0;
  double c_obs = 1.0;
  for (long n = 1;; ++n) {
    const double d = const_field_lambda_minus_mu(n, b);
    sum += d;
    const double dn = static_cast<double>(n);
    c_obs = std::max(c_obs, std::abs(d) * dn * dn * dn * dn / std::abs(b));
    if (n >= 64) {
      const double tail = 2.0 * c_obs * std::abs(b) / (3.0 * dn * dn * dn);
      if (tail <= tol) return sum;
    }
    if (n > 2000000) throw NonConvergent("lambda_mu_sum: term cap exceeded");
  }
}

/// sum_{n>=1} (lambda_n^2(b) - mu_n^2(b)) via (lambda-mu)(lambda+mu).
inline double lambda_mu_sq_sum(double b, double tol) {
  if (b == 0.0) return 0.0;
  double sum = 0.0;
  double c_obs = 1.0;
  for (long n = 1;; ++n) {
    const double diff = const_field_lambda_minus_mu(n, b);
    const double mu = const_field_mu(n, b);
    const double d = diff * (2.0 * mu + diff);  // lambda = mu + diff
    sum += d;
    const double dn = static_cast<double>(n);
    c_obs = std::max(c_obs, std::abs(d) * dn * dn * dn / std::abs(b));
    if (n >= 64) {
      const double tail = 2.0 * c_obs * std::abs(b) / (2.0 * dn * dn);
      if (tail <= tol) return sum;
    }
    if (n > 2000000) throw NonConvergent("lambda_mu_sq_sum: term cap exceeded");
  }
}

}  // namespace detail

/// Convergent series sum_{n>=1} (lambda_n(b) - mu_n(b)) (Richardson target).
inline double const_field_lambda_mu_sum(double b, double tol = 1e-10) {
  return detail::lambda_mu_sum(b, tol);
}

/// Polynomial coefficient C(b) of the t term of the mu-series expansion.
inline double const_field_C(double b) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double z3 = zeta_odd(3);
  return (1.0 / 6.0) * (-3.0 * b + 3.0 * b * b + (b - b * b) * pi2 -
                        (6.0 * b - 21.0 * b * b + 6.0 * b * b * b) * z3);
}

/// Polynomial coefficient D(b) of the t^2 term (the 7560-denominator block).
inline double const_field_D(double b) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double pi4 = pi2 * pi2;
  const double pi6 = pi4 * pi2;
  const double z3 = zeta_odd(3);
  const double z5 = zeta_odd(5);
  const double b2 = b * b, b3 = b2 * b, b4 = b3 * b, b5 = b4 * b, b6 = b5 * b;
  return (1.0 / 7560.0) *
         (-10710.0 * b + 5670.0 * b2 + 1260.0 * b3 + (1260.0 * b - 2520.0 * b2) * pi2 +
          (126.0 * b2 - 378.0 * b3 + 126.0 * b4) * pi4 +
          (4.0 * b2 - 28.0 * b3 + 57.0 * b4 - 28.0 * b5 + 4.0 * b6) * pi6 -
          (15120.0 * b2 - 34020.0 * b3 + 7560.0 * b4) * z3 -
          (7560.0 * b2 - 34020.0 * b3 + 34020.0 * b4 - 7560.0 * b5) * z5);
}

/// Even polynomial part of the t^2 coefficient (equals D(b) + D(-b)).
inline double const_field_t2_polynomial(double b) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double pi4 = pi2 * pi2;
  const double pi6 = pi4 * pi2;
  const double z3 = zeta_odd(3);
  const double z5 = zeta_odd(5);
  const double b2 = b * b, b4 = b2 * b2, b6 = b4 * b2;
  return (1.0 / 3780.0) *
         ((5670.0 - 2520.0 * pi2 + 126.0 * pi4 + 4.0 * pi6 - 15120.0 * z3 -
           7560.0 * z5) *
              b2 +
          (126.0 * pi4 + 57.0 * pi6 - 7560.0 * z3 - 34020.0 * z5) * b4 + 4.0 * pi6 * b6);
}

/// t coefficient of the relative trace, series-corrected.
inline double const_field_E(double b, double tol = 1e-9) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double lam0 = const_field_eig(0, b);
  return (1.0 - pi2 / 3.0 + 7.0 * zeta_odd(3)) * b * b - lam0 -
         detail::lambda_mu_sum(b, tol) - detail::lambda_mu_sum(-b, tol);
}

/// t^2 coefficient of the relative trace, series-corrected.
inline double const_field_F(double b, double tol = 1e-9) {
  const double lam0 = const_field_eig(0, b);
  return const_field_t2_polynomial(b) + lam0 * lam0 / 2.0 +
         0.5 * detail::lambda_mu_sq_sum(b, tol) + 0.5 * detail::lambda_mu_sq_sum(-b, tol);
}

/// Relative (default) or absolute constant-field trace expansion:
/// E(b) t + F(b) t^2 - (b^2/2) t^3 log t + O(|b| t^3); the absolute variant
/// adds the zero-field coth(t/2) terms 2/t and t/6.
inline Expansion theorem62_expansion(double b, double tol = 1e-9, bool absolute = false) {
  Expansion e;
  e.model = ModelSpec(ConstFieldDisk(b));
  const double E = const_field_E(b, tol);
  const double F = const_field_F(b, tol);
  if (absolute) {
    e.add(Power(-1), false, 2.0);
    e.add(Power(1), false, E + 1.0 / 6.0);
  } else {
    e.add(Power(1), false, E);
  }
  e.add(Power(2), false, F);
  e.add(Power(3), true, -b * b / 2.0);
  e.set_remainder(Power(3));
  return e;
}

/// Refinement noted alongside the theorem: the next logarithmic term of the
/// relative trace is -b^2 t^4 log t.
inline double theorem62_t4_log_coefficient(double b) { return -b * b; }

/// Sphere trace expansion: re-expansion of
///   (1/t - sum_{k<=N} ((-t)^k/(k+1)!) B_{2k+2}((m+1)/2)) e^{t (m^2+1)/4}
/// in powers of t through t^N.
inline Expansion sphere_expansion(int m, int N) {
  if (m < 0) throw DomainError("sphere_expansion: m must be nonnegative");
  if (N < 0) throw DomainError("sphere_expansion: N must be nonnegative");
  if (2 * N + 2 > 60) throw DomainError("sphere_expansion: order too large");
  const double A = (static_cast<double>(m) * m + 1.0) / 4.0;
  const double x = (m + 1.0) / 2.0;
  std::vector<double> c(N + 1);
  for (int k = 0; k <= N; ++k)
    c[k] = ((k % 2 == 0) ? 1.0 : -1.0) * bernoulli_polynomial(2 * k + 2, x) /
           factorial(k + 1);
  Expansion e;
  e.model = ModelSpec(SphereLandau(m));
  for (int p = -1; p <= N; ++p) {
    double coeff = std::pow(A, p + 1) / factorial(p + 1);
    for (int k = 0; k <= std::min(p, N); ++k)
      coeff -= c[k] * std::pow(A, p - k) / factorial(p - k);
    e.add(Power(p), false, coeff);
  }
  e.set_remainder(Power(N + 1));
  return e;
}

/// Oscillator expansions (isotropic three-term / anisotropic two-term form).
inline Expansion oscillator_expansion(const ModelSpec& model) {
  Expansion e;
  e.model = model;
  if (const auto* iso = std::get_if<IsoOscillator>(&model)) {
    const double b2 = iso->b * iso->b;
    e.add(Power(-2), false, 0.25);
    e.add(Power(0), false, -(2.0 + b2) / 24.0);
    e.add(Power(2), false, (1.0 + 7.0 * b2 / 6.0 + 7.0 * b2 * b2 / 24.0) / 60.0);
    e.set_remainder(Power(4));
    return e;
  }
  if (const auto* an = std::get_if<AnisoOscillator>(&model)) {
    const auto [lp, lm] = aniso_oscillator_lambda_pm(an->b, an->k1, an->k2);
    const double kk = an->k1 * an->k2;  // sqrt(lambda+ lambda-) = k1 k2
    e.add(Power(-2), false, 1.0 / (4.0 * kk));
    e.add(Power(0), false, -(lp + lm) / (24.0 * kk));
    e.set_remainder(Power(2));
    return e;
  }
  throw DomainError("oscillator_expansion: model must be an oscillator");
}

/// Leading relative-trace constant of an oscillator: -b^2/(24 k1 k2).
inline double oscillator_relative_constant(const ModelSpec& model) {
  if (const auto* iso = std::get_if<IsoOscillator>(&model))
    return -iso->b * iso->b / 24.0;
  if (const auto* an = std::get_if<AnisoOscillator>(&model))
    return -an->b * an->b / (24.0 * an->k1 * an->k2);
  throw DomainError("oscillator_relative_constant: model must be an oscillator");
}

}  // namespace heatlab

#endif  // HEATLAB_ASYMPTOTICS_HPP
