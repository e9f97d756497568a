// SPDX-License-Identifier: Apache-2.0
//
// The solvable models. Flux parameters are reduced to [0,1) at
// construction; all other range constraints are enforced here so the rest
// of the library can assume valid parameters.

#ifndef HEATLAB_MODELS_HPP
#define HEATLAB_MODELS_HPP

#include <cmath>
#include <string>
#include <variant>

#include "heatlab/errors.hpp"

namespace heatlab {

/// Fractional part mapping any real flux into [0, 1).
inline double reduce_flux(double nu) {
  if (std::isnan(nu)) throw DomainError("reduce_flux: NaN flux");
  double f = nu - std::floor(nu);
  if (f >= 1.0) f = 0.0;  // guards the f == 1.0 rounding corner
  return f;
}

struct AbDisk {
  double nu;
  explicit AbDisk(double nu_) : nu(reduce_flux(nu_)) {}
};

struct MetricDisk {
  double nu;
  double theta1;  // boundary value theta(1) of the metric profile
  MetricDisk(double nu_, double theta1_) : nu(reduce_flux(nu_)), theta1(theta1_) {
    if (!(theta1 > 0.0)) throw DomainError("MetricDisk: theta1 must be positive");
  }
};

struct Cylinder {
  double nu;  // in (0, 1); integer flux makes k = nu degenerate
  explicit Cylinder(double nu_) : nu(reduce_flux(nu_)) {
    if (nu == 0.0) throw DomainError("Cylinder: integer flux is excluded");
  }
};

struct AnnulusFull {
  double nu;
  double R;  // inner radius, R = e^{-a}
  AnnulusFull(double nu_, double R_) : nu(reduce_flux(nu_)), R(R_) {
    if (!(R > 0.0 && R < 1.0)) throw DomainError("AnnulusFull: R must lie in (0,1)");
  }
};

struct AnnulusPartial {
  double nu;
  double R;
  AnnulusPartial(double nu_, double R_) : nu(reduce_flux(nu_)), R(R_) {
    if (!(R > 0.0 && R < 1.0)) throw DomainError("AnnulusPartial: R must lie in (0,1)");
  }
};

struct ConstFieldDisk {
  double b;
  double field_limit;  // L, the largest |b| this model admits
  explicit ConstFieldDisk(double b_, double field_limit_ = 4.0)
      : b(b_), field_limit(field_limit_) {
    if (!(field_limit > 0.0))
      throw DomainError("ConstFieldDisk: field limit must be positive");
    if (!(std::abs(b) <= field_limit))
      throw DomainError("ConstFieldDisk: |b| exceeds the field limit");
  }
};

struct IsoOscillator {
  double b;
  explicit IsoOscillator(double b_) : b(b_) {
    if (std::isnan(b)) throw DomainError("IsoOscillator: NaN field");
  }
};

struct AnisoOscillator {
  double b;
  double k1;
  double k2;
  AnisoOscillator(double b_, double k1_, double k2_) : b(b_), k1(k1_), k2(k2_) {
    if (!(k1 > 0.0 && k2 > 0.0))
      throw DomainError("AnisoOscillator: k1, k2 must be positive");
  }
};

struct AbOscillator {
  double nu;    // reduced flux; the level multiset only sees {nu}
  double beta;  // quadratic potential strength
  AbOscillator(double nu_, double beta_) : nu(reduce_flux(nu_)), beta(beta_) {
    if (!(beta > 0.0)) throw DomainError("AbOscillator: beta must be positive");
  }
};

struct SphereLandau {
  int m;  // integer field strength, m >= 0
  explicit SphereLandau(int m_) : m(m_) {
    if (m < 0) throw DomainError("SphereLandau: m must be nonnegative");
  }
};

using ModelSpec = std::variant<AbDisk, MetricDisk, Cylinder, AnnulusFull, AnnulusPartial,
                               ConstFieldDisk, IsoOscillator, AnisoOscillator,
                               AbOscillator, SphereLandau>;

inline std::string model_kind(const ModelSpec& m) {
  struct Visitor {
    std::string operator()(const AbDisk&) const { return "ab-disk"; }
    std::string operator()(const MetricDisk&) const { return "metric-disk"; }
    std::string operator()(const Cylinder&) const { return "cylinder"; }
    std::string operator()(const AnnulusFull&) const { return "annulus-full"; }
    std::string operator()(const AnnulusPartial&) const { return "annulus-partial"; }
    std::string operator()(const ConstFieldDisk&) const { return "const-field-disk"; }
    std::string operator()(const IsoOscillator&) const { return "iso-oscillator"; }
    std::string operator()(const AnisoOscillator&) const { return "aniso-oscillator"; }
    std::string operator()(const AbOscillator&) const { return "ab-oscillator"; }
    std::string operator()(const SphereLandau&) const { return "sphere-landau"; }
  };
  return std::visit(Visitor{}, m);
}

}  // namespace heatlab

#endif  // HEATLAB_MODELS_HPP
