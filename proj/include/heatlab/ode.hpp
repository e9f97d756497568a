// SPDX-License-Identifier: Apache-2.0
#ifndef HEATLAB_ODE_HPP
#define HEATLAB_ODE_HPP

#include <array>
#include <cmath>

#include "heatlab/errors.hpp"

namespace heatlab {
namespace detail {

/// Adaptive Dormand-Prince 5(4) integration of a 2-component system
/// y' = f(r, y) from r0 to r1, relative error control per component.
template <typename F>
std::array<double, 2> rk45_integrate(F&& f, double r0, double r1,
                                     std::array<double, 2> y, double rtol) {
  // Dormand-Prince tableau
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  double r = r0;
  double h = (r1 - r0) * 1e-4;
  long steps = 0;
  auto k1 = f(r, y);
  while (r < r1) {
    if (++steps > 2000000)
      throw IntegrationFailure("rk45: step count exceeded");
    if (r + h > r1) h = r1 - r;
    auto stage = [&](double dr, const std::array<double, 2>& dy) {
      return f(r + dr * h, {y[0] + h * dy[0], y[1] + h * dy[1]});
    };
    const auto k2 = stage(c2, {a21 * k1[0], a21 * k1[1]});
    const auto k3 = stage(c3, {a31 * k1[0] + a32 * k2[0], a31 * k1[1] + a32 * k2[1]});
    const auto k4 = stage(c4, {a41 * k1[0] + a42 * k2[0] + a43 * k3[0],
                               a41 * k1[1] + a42 * k2[1] + a43 * k3[1]});
    const auto k5 = stage(c5, {a51 * k1[0] + a52 * k2[0] + a53 * k3[0] + a54 * k4[0],
                               a51 * k1[1] + a52 * k2[1] + a53 * k3[1] + a54 * k4[1]});
    const auto k6 =
        stage(1.0, {a61 * k1[0] + a62 * k2[0] + a63 * k3[0] + a64 * k4[0] + a65 * k5[0],
                    a61 * k1[1] + a62 * k2[1] + a63 * k3[1] + a64 * k4[1] + a65 * k5[1]});
    std::array<double, 2> y5;
    for (int i = 0; i < 2; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    const auto k7 = f(r + h, y5);
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                             e6 * k6[i] + e7 * k7[i]);
      const double scale = std::abs(y[i]) + std::abs(h * k1[i]) + 1e-300;
      err = std::max(err, std::abs(ei) / (rtol * scale));
    }
    if (err <= 1.0) {
      r += h;
      y = y5;
      k1 = k7;  // FSAL
    }
    const double grow = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::min(5.0, std::max(0.2, grow));
    if (!(h > 1e-16 * std::max(std::abs(r), 1.0)))
      throw IntegrationFailure("rk45: step size collapsed");
  }
  return y;
}

}  // namespace detail
}  // namespace heatlab

#endif  // HEATLAB_ODE_HPP
