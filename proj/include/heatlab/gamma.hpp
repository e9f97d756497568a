// SPDX-License-Identifier: Apache-2.0
#ifndef HEATLAB_GAMMA_HPP
#define HEATLAB_GAMMA_HPP

#include <array>
#include <cmath>
#include <numbers>

#include "heatlab/errors.hpp"

namespace heatlab {

/// Gamma function via the Lanczos rational approximation (g = 7, 9 terms),
/// with the reflection formula for arguments below 1/2.
inline double gamma_fn(double x) {
  if (std::isnan(x)) throw DomainError("gamma_fn: NaN argument");
  if (x <= 0.0 && x == std::floor(x))
    throw DomainError("gamma_fn: nonpositive integer argument");

  static constexpr std::array<double, 9> kLanczos = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;

  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  }
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + g + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

/// n! as a double, n <= 170.
inline double factorial(int n) {
  if (n < 0 || n > 170) throw DomainError("factorial: argument out of range");
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Binomial coefficient C(n, k) as a double.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

}  // namespace heatlab

#endif  // HEATLAB_GAMMA_HPP
