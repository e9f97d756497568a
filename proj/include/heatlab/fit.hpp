// SPDX-License-Identifier: Apache-2.0
//
// Least-squares extraction of expansion coefficients from sampled traces:
// Householder QR on a column-equilibrated design matrix built from powers
// t^p and t^p log t, plus Richardson extrapolation for limits in a small
// parameter.

#ifndef HEATLAB_FIT_HPP
#define HEATLAB_FIT_HPP

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "heatlab/errors.hpp"
#include "heatlab/util.hpp"

namespace heatlab {

struct BasisTerm {
  Power power;
  bool has_log = false;
};

struct FitResult {
  std::vector<BasisTerm> basis;
  std::vector<double> coefficients;
  double residual_max = 0.0;
  double condition_estimate = 0.0;
  bool ill_conditioned = false;  // condition_estimate > 1e8

  double coefficient(Power p, bool has_log) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].power == p && basis[i].has_log == has_log) return coefficients[i];
    throw DomainError("FitResult::coefficient: term not in basis");
  }
};

/// Least squares for samples (t_i, y_i) against sum_j c_j t^{p_j} (log t)^{e_j}.
inline FitResult fit_expansion(std::span<const std::pair<double, double>> samples,
                               std::vector<BasisTerm> basis) {
  const std::size_t m = samples.size();
  const std::size_t n = basis.size();
  if (n == 0) throw DomainError("fit_expansion: empty basis");
  if (m < n + 2) throw DomainError("fit_expansion: need at least basis+2 samples");
  double t_min = samples[0].first, t_max = samples[0].first;
  for (const auto& [t, y] : samples) {
    if (!(t > 0.0)) throw DomainError("fit_expansion: t values must be positive");
    t_min = std::min(t_min, t);
    t_max = std::max(t_max, t);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (samples[i].first == samples[j].first)
        throw DomainError("fit_expansion: t values must be distinct");
  if (!(t_max >= 4.0 * t_min))
    throw DomainError("fit_expansion: t values must span at least a factor 4");

  // design matrix, column-equilibrated
  std::vector<double> a(m * n);
  std::vector<double> rhs(m);
  std::vector<double> col_scale(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = samples[i].first;
    rhs[i] = samples[i].second;
    for (std::size_t j = 0; j < n; ++j) {
      double v = std::pow(t, basis[j].power.to_double());
      if (basis[j].has_log) v *= std::log(t);
      a[i * n + j] = v;
      col_scale[j] += v * v;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    col_scale[j] = std::sqrt(col_scale[j]);
    if (col_scale[j] == 0.0) throw DomainError("fit_expansion: zero basis column");
    for (std::size_t i = 0; i < m; ++i) a[i * n + j] /= col_scale[j];
  }

  // Householder QR; reflectors applied to the matrix and rhs together
  std::vector<double> v(m);
  for (std::size_t j = 0; j < n; ++j) {
    double norm = 0.0;
    for (std::size_t i = j; i < m; ++i) norm += a[i * n + j] * a[i * n + j];
    norm = std::sqrt(norm);
    if (norm == 0.0) throw DomainError("fit_expansion: rank-deficient design");
    const double alpha = a[j * n + j] >= 0.0 ? -norm : norm;
    double vnorm2 = 0.0;
    for (std::size_t i = j; i < m; ++i) {
      v[i] = a[i * n + j];
      if (i == j) v[i] -= alpha;
      vnorm2 += v[i] * v[i];
    }
    if (vnorm2 == 0.0) continue;  // column already reduced
    for (std::size_t k = j; k < n; ++k) {
      double s = 0.0;
      for (std::size_t i = j; i < m; ++i) s += v[i] * a[i * n + k];
      s *= 2.0 / vnorm2;
      for (std::size_t i = j; i < m; ++i) a[i * n + k] -= s * v[i];
    }
    double s = 0.0;
    for (std::size_t i = j; i < m; ++i) s += v[i] * rhs[i];
    s *= 2.0 / vnorm2;
    for (std::size_t i = j; i < m; ++i) rhs[i] -= s * v[i];
  }

  // back substitution on the upper-triangular block
  std::vector<double> x(n);
  for (std::size_t jj = n; jj-- > 0;) {
    double s = rhs[jj];
    for (std::size_t k = jj + 1; k < n; ++k) s -= a[jj * n + k] * x[k];
    x[jj] = s / a[jj * n + jj];
  }

  double dmax = 0.0, dmin = std::abs(a[0]);
  for (std::size_t j = 0; j < n; ++j) {
    dmax = std::max(dmax, std::abs(a[j * n + j]));
    dmin = std::min(dmin, std::abs(a[j * n + j]));
  }

  FitResult out;
  out.basis = std::move(basis);
  out.coefficients.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.coefficients[j] = x[j] / col_scale[j];
  out.condition_estimate = dmin > 0.0 ? dmax / dmin : 1e300;
  out.ill_conditioned = out.condition_estimate > 1e8;

  double rmax = 0.0;
  for (const auto& [t, y] : samples) {
    double pred = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double v = std::pow(t, out.basis[j].power.to_double());
      if (out.basis[j].has_log) v *= std::log(t);
      pred += out.coefficients[j] * v;
    }
    rmax = std::max(rmax, std::abs(pred - y));
  }
  out.residual_max = rmax;
  return out;
}

/// Richardson / Neville limit of f(h) as h -> 0 given values at
/// h0, h0/s, h0/s^2, ..., eliminating integer powers h, h^2, ...
inline double richardson_limit(std::span<const double> values, double s) {
  if (values.size() < 2) throw DomainError("richardson_limit: need >= 2 values");
  if (!(s > 1.0)) throw DomainError("richardson_limit: ratio must exceed 1");
  std::vector<double> row(values.begin(), values.end());
  const std::size_t n = row.size();
  double power = 1.0;
  for (std::size_t level = 1; level < n; ++level) {
    power *= s;
    for (std::size_t i = 0; i + level < n; ++i)
      row[i] = (power * row[i + 1] - row[i]) / (power - 1.0);
  }
  return row[0];
}

}  // namespace heatlab

#endif  // HEATLAB_FIT_HPP
