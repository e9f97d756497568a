// SPDX-License-Identifier: Apache-2.0
#ifndef HEATLAB_UTIL_HPP
#define HEATLAB_UTIL_HPP

#include <atomic>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "heatlab/errors.hpp"

namespace heatlab {

/// Exact rational exponent for expansion terms (t^{num/den}).
struct Power {
  int num = 0;
  int den = 1;

  constexpr Power() = default;
  constexpr Power(int n, int d = 1) : num(n), den(d) {
    if (den == 0) throw DomainError("Power: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / den; }

  friend constexpr bool operator==(const Power& a, const Power& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend constexpr std::strong_ordering operator<=>(const Power& a, const Power& b) {
    // cross-multiplication; dens are positive
    const std::int64_t lhs = static_cast<std::int64_t>(a.num) * b.den;
    const std::int64_t rhs = static_cast<std::int64_t>(b.num) * a.den;
    return lhs <=> rhs;
  }
};

inline std::string to_string(const Power& p) {
  if (p.den == 1) return std::to_string(p.num);
  return std::to_string(p.num) + "/" + std::to_string(p.den);
}

/// coth(x) for x > 0, stable for both tiny and huge arguments.
inline double coth(double x) {
  if (!(x > 0.0)) throw DomainError("coth: argument must be positive");
  if (x > 350.0) return 1.0;
  return 1.0 + 2.0 / std::expm1(2.0 * x);
}

/// coth(x) - 1 for x > 0 without cancellation.
inline double coth_minus_one(double x) {
  if (!(x > 0.0)) throw DomainError("coth_minus_one: argument must be positive");
  if (x > 360.0) return 0.0;
  return 2.0 / std::expm1(2.0 * x);
}

/// cosh(x)/sinh(y) for y > 0 and |x| <= y, without overflow at large y.
inline double cosh_over_sinh(double x, double y) {
  if (!(y > 0.0)) throw DomainError("cosh_over_sinh: y must be positive");
  const double ax = std::abs(x);
  if (ax > y) throw DomainError("cosh_over_sinh: requires |x| <= y");
  // cosh(x)/sinh(y) = e^{|x|-y} (1 + e^{-2|x|}) / (1 - e^{-2y})
  return std::exp(ax - y) * (1.0 + std::exp(-2.0 * ax)) / (-std::expm1(-2.0 * y));
}

/// Geometric grid of n points from lo to hi (inclusive), ascending.
inline std::vector<double> geometric_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2)
    throw DomainError("geometric_grid: need 0 < lo < hi and n >= 2");
  std::vector<double> g(n);
  const double r = std::pow(hi / lo, 1.0 / (n - 1));
  double v = lo;
  for (int i = 0; i < n; ++i) {
    g[i] = v;
    v *= r;
  }
  g.back() = hi;
  return g;
}

/// Number of worker threads: HEATLAB_THREADS, 0 or unset meaning "auto".
inline unsigned worker_thread_count() {
  unsigned n = 0;
  if (const char* env = std::getenv("HEATLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 0) n = static_cast<unsigned>(v);
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

/// Evaluate fn(i) for i in [0, count) possibly in parallel; results are
/// stored by index so output order is independent of scheduling.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  const unsigned workers = std::min<std::size_t>(worker_thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        out[i] = fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace heatlab

#endif  // HEATLAB_UTIL_HPP
