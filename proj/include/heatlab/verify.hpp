// SPDX-License-Identifier: Apache-2.0
//
// Independent numerical oracles: direct-sum vs closed-form sweeps,
// coefficient extraction checks, inequality and symmetry sweeps, the
// Kummer truncation-bound audit and the annulus R -> 0 limit check.

#ifndef HEATLAB_VERIFY_HPP
#define HEATLAB_VERIFY_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "heatlab/asymptotics.hpp"
#include "heatlab/errors.hpp"
#include "heatlab/fit.hpp"
#include "heatlab/heattrace.hpp"
#include "heatlab/models.hpp"
#include "heatlab/spectra.hpp"
#include "heatlab/util.hpp"

namespace heatlab {

struct VerificationReport {
  std::string check_name;
  double quantity = 0.0;
  double oracle = 0.0;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> metadata;
};

inline VerificationReport make_report(
    std::string name, double quantity, double oracle, double tolerance,
    std::vector<std::pair<std::string, std::string>> metadata = {}) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.quantity = quantity;
  r.oracle = oracle;
  r.abs_error = std::abs(quantity - oracle);
  r.tolerance = tolerance;
  r.passed = r.abs_error <= tolerance;
  r.metadata = std::move(metadata);
  return r;
}

/// One-sided inequality report: passes when quantity <= bound + slack.
inline VerificationReport make_bound_report(
    std::string name, double quantity, double bound, double slack,
    std::vector<std::pair<std::string, std::string>> metadata = {}) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.quantity = quantity;
  r.oracle = bound;
  r.abs_error = quantity - bound;  // signed excess
  r.tolerance = slack;
  r.passed = quantity <= bound + slack;
  r.metadata = std::move(metadata);
  return r;
}

/// Compare the direct and closed/theta evaluation routes of a model over a
/// time grid; tolerance is the certified direct tail plus 1e-11.
inline std::vector<VerificationReport> cross_check(const ModelSpec& model,
                                                   const std::vector<double>& t_grid,
                                                   double tol = 1e-12) {
  std::vector<VerificationReport> out;
  const std::string kind = model_kind(model);
  const Spectrum spec(model);
  for (double t : t_grid) {
    const TraceResult direct = direct_trace(spec, t, tol);
    const TraceResult closed = closed_trace(model, t, tol);
    out.push_back(make_report(kind + " direct-vs-closed t=" + std::to_string(t),
                              direct.value, closed.value,
                              direct.tail_bound + closed.tail_bound + 1e-11,
                              {{"t", std::to_string(t)},
                               {"terms", std::to_string(direct.terms_used)}}));
  }
  return out;
}

/// Annulus eigenvalue dual route: closed form against the 2x2 matrix
/// eigendecomposition, modes |m| <= m_max.
inline std::vector<VerificationReport> annulus_eig_check(double nu, double R,
                                                         long m_max,
                                                         double tol = 1e-12) {
  std::vector<VerificationReport> out;
  for (long m = -m_max; m <= m_max; ++m) {
    if (std::abs(static_cast<double>(m) - nu) == 0.0) continue;
    const auto [hi, lo] = annulus_dtn_matrix(m, nu, R).eigenvalues();
    const double cp = annulus_eig(m, nu, R, Branch::plus);
    const double cm = annulus_eig(m, nu, R, Branch::minus);
    const double scale = std::max(1.0, std::abs(hi));
    out.push_back(make_report("annulus eig+ m=" + std::to_string(m), cp, hi,
                              tol * scale));
    out.push_back(make_report("annulus eig- m=" + std::to_string(m), cm, lo,
                              tol * std::max(1.0, std::abs(lo))));
  }
  return out;
}

enum class DiamagneticFamily { ab_disk, iso_oscillator, aniso_oscillator,
                               const_field_disk, sphere_landau };

/// Diamagnetic sweeps: the trace with field must not exceed the zero-field
/// trace (up to certified truncation slack) at every grid point.
inline std::vector<VerificationReport> diamagnetic_sweep(
    DiamagneticFamily family, const std::vector<double>& b_grid,
    const std::vector<double>& t_grid, double tol = 1e-12) {
  std::vector<VerificationReport> out;
  for (double b : b_grid) {
    for (double t : t_grid) {
      switch (family) {
        case DiamagneticFamily::ab_disk: {
          const double nu = reduce_flux(b);
          const double with_field = ab_disk_closed(nu, t);
          const double without = ab_disk_closed(0.0, t);
          out.push_back(make_bound_report("diamagnetic ab-disk nu=" + std::to_string(nu) +
                                              " t=" + std::to_string(t),
                                          with_field, without, 1e-13 * without));
          break;
        }
        case DiamagneticFamily::iso_oscillator: {
          out.push_back(make_bound_report(
              "diamagnetic iso-oscillator b=" + std::to_string(b) +
                  " t=" + std::to_string(t),
              iso_oscillator_closed(b, t), iso_oscillator_closed(0.0, t), 0.0));
          break;
        }
        case DiamagneticFamily::aniso_oscillator: {
          const double k1 = 2.0, k2 = 3.0;
          out.push_back(make_bound_report(
              "diamagnetic aniso-oscillator b=" + std::to_string(b) +
                  " t=" + std::to_string(t),
              aniso_oscillator_closed(b, k1, k2, t),
              aniso_oscillator_closed(0.0, k1, k2, t), 0.0));
          break;
        }
        case DiamagneticFamily::const_field_disk: {
          const TraceResult rel = const_field_relative_trace(b, t, tol);
          out.push_back(make_bound_report(
              "diamagnetic const-field b=" + std::to_string(b) +
                  " t=" + std::to_string(t),
              rel.value, 0.0, rel.tail_bound + 1e-12));
          break;
        }
        case DiamagneticFamily::sphere_landau: {
          const int m = static_cast<int>(b);
          const TraceResult with_field = sphere_trace(m, t, TraceMethod::direct, tol);
          const TraceResult without = sphere_trace(0, t, TraceMethod::direct, tol);
          out.push_back(make_bound_report(
              "diamagnetic sphere m=" + std::to_string(m) + " t=" + std::to_string(t),
              with_field.value, without.value,
              with_field.tail_bound + without.tail_bound + 1e-12));
          break;
        }
      }
    }
  }
  return out;
}

enum class SymmetryTransform { flux_reflection, field_parity, flux_period };

/// Trace invariance sweeps: nu -> 1-nu, b -> -b, nu -> nu+1.
inline std::vector<VerificationReport> symmetry_sweep(
    const ModelSpec& model, SymmetryTransform transform,
    const std::vector<double>& t_grid, double tol = 1e-11) {
  std::vector<VerificationReport> out;
  for (double t : t_grid) {
    double base = 0.0, transformed = 0.0;
    std::string label;
    if (const auto* disk = std::get_if<AbDisk>(&model)) {
      if (transform == SymmetryTransform::flux_reflection) {
        base = ab_disk_closed(disk->nu, t);
        transformed = ab_disk_closed(reduce_flux(1.0 - disk->nu), t);
        label = "ab-disk nu<->1-nu";
      } else if (transform == SymmetryTransform::flux_period) {
        base = ab_disk_closed(disk->nu, t);
        transformed = ab_disk_closed(AbDisk(disk->nu + 1.0).nu, t);
        label = "ab-disk nu->nu+1";
      } else {
        throw DomainError("symmetry_sweep: transform not applicable to ab-disk");
      }
    } else if (const auto* cfd = std::get_if<ConstFieldDisk>(&model)) {
      if (transform != SymmetryTransform::field_parity)
        throw DomainError("symmetry_sweep: transform not applicable to const-field");
      base = const_field_relative_trace(cfd->b, t, tol * 1e-1).value;
      transformed = const_field_relative_trace(-cfd->b, t, tol * 1e-1).value;
      label = "const-field b->-b";
    } else if (const auto* osc = std::get_if<IsoOscillator>(&model)) {
      if (transform != SymmetryTransform::field_parity)
        throw DomainError("symmetry_sweep: transform not applicable to oscillator");
      base = iso_oscillator_closed(osc->b, t);
      transformed = iso_oscillator_closed(-osc->b, t);
      label = "iso-oscillator b->-b";
    } else if (const auto* ab = std::get_if<AbOscillator>(&model)) {
      if (transform != SymmetryTransform::flux_period)
        throw DomainError("symmetry_sweep: transform not applicable to ab-oscillator");
      base = ab_oscillator_trace(ab->nu, ab->beta, t, tol).value;
      transformed = ab_oscillator_trace(ab->nu + 1.0, ab->beta, t, tol).value;
      label = "ab-oscillator nu->nu+1";
    } else {
      throw DomainError("symmetry_sweep: unsupported model");
    }
    out.push_back(make_report(label + " t=" + std::to_string(t), transformed, base,
                              tol * std::max(1.0, std::abs(base))));
  }
  return out;
}

/// R -> 0 annulus limit: both the partial and the full trace approach the
/// AB disk trace; the gap must decrease along the R sequence.
inline std::vector<VerificationReport> annulus_limit_check(
    double nu, double t, const std::vector<double>& R_sequence, double final_gap_tol,
    double tol = 1e-12) {
  if (R_sequence.size() < 2)
    throw DomainError("annulus_limit_check: need a decreasing R sequence");
  std::vector<VerificationReport> out;
  const double limit = ab_disk_closed(nu, t);
  double prev_full = -1.0, prev_partial = -1.0;
  for (std::size_t i = 0; i < R_sequence.size(); ++i) {
    const double R = R_sequence[i];
    if (i > 0 && !(R < R_sequence[i - 1]))
      throw DomainError("annulus_limit_check: R sequence must decrease");
    const double full = annulus_trace(ModelSpec(AnnulusFull(nu, R)), t, tol).value;
    const double partial = annulus_trace(ModelSpec(AnnulusPartial(nu, R)), t, tol).value;
    const double gap_full = std::abs(full - limit);
    const double gap_partial = std::abs(partial - limit);
    const bool last = i + 1 == R_sequence.size();
    const double gate = last ? final_gap_tol : 1e10;
    out.push_back(make_bound_report(
        "annulus full limit R=" + std::to_string(R), gap_full, gate, 0.0,
        {{"R", std::to_string(R)}, {"t", std::to_string(t)}}));
    out.push_back(make_bound_report(
        "annulus partial limit R=" + std::to_string(R), gap_partial, gate, 0.0));
    if (i > 0) {
      out.push_back(make_bound_report("annulus full gap decreasing R=" +
                                          std::to_string(R),
                                      gap_full, prev_full, 0.0));
      out.push_back(make_bound_report("annulus partial gap decreasing R=" +
                                          std::to_string(R),
                                      gap_partial, prev_partial, 0.0));
    }
    prev_full = gap_full;
    prev_partial = gap_partial;
  }
  return out;
}

struct KummerAuditPoint {
  double a, c, z;
  int n;  // truncation order under audit
};

/// Audit of the truncation bound: the distance between the N-term partial
/// sum and a 60-term reference must not exceed the certified bound.
inline std::vector<VerificationReport> kummer_bound_audit(
    const std::vector<KummerAuditPoint>& grid) {
  std::vector<VerificationReport> out;
  for (const auto& p : grid) {
    if (!(p.a > 0.0 && p.a < p.c) || p.n < 0 || p.n > 50)
      throw DomainError("kummer_bound_audit: invalid grid point");
    auto partial = [&](int order) {
      double sum = 1.0, term = 1.0;
      for (int r = 0; r < order; ++r) {
        term *= (p.a + r) / (p.c + r) * p.z / (r + 1.0);
        sum += term;
      }
      return sum;
    };
    const double reference = partial(60);
    const double truncated = partial(p.n);
    const double bound = pochhammer(p.a, p.n + 1) /
                         (pochhammer(p.c, p.n + 1) * factorial(p.n + 1)) *
                         std::pow(std::abs(p.z), p.n + 1) *
                         std::exp(std::max(p.z, 0.0));
    VerificationReport r = make_bound_report(
        "kummer bound a=" + std::to_string(p.a) + " c=" + std::to_string(p.c) +
            " z=" + std::to_string(p.z) + " N=" + std::to_string(p.n),
        std::abs(reference - truncated), bound * (1.0 + 1e-12) + 1e-16, 0.0);
    r.metadata.emplace_back("tightness",
                            std::to_string(std::abs(reference - truncated) /
                                           (bound > 0.0 ? bound : 1.0)));
    out.push_back(std::move(r));
  }
  return out;
}

/// Default audit grid over (a, c, z, N).
inline std::vector<KummerAuditPoint> default_kummer_audit_grid() {
  std::vector<KummerAuditPoint> grid;
  for (double a : {0.3, 0.5, 0.9})
    for (double c : {1.0, 2.0, 3.5})
      for (double z : {-2.0, -1.0, -0.25, 0.5, 1.0, 2.0})
        for (int n : {1, 3, 5, 8})
          if (a < c) grid.push_back({a, c, z, n});
  return grid;
}

/// Recover the t^3 log t coefficient of the constant-field relative trace.
///
/// Every analytically known term is removed first (E t, F t^2 and the
/// known next-log refinement -b^2 t^4 log t), then r(t)/t^3 is fitted
/// against {log t, 1}: the same model as A t^3 log t + B t^3, but weighted
/// so the small-t samples carry equal say, which keeps the two nearly
/// collinear columns apart.
inline std::pair<double, double> extract_relative_log_coefficient(
    double b, const std::vector<double>& t_grid, double series_tol = 1e-8,
    double trace_tol = 1e-11, FitResult* detail_out = nullptr) {
  if (t_grid.size() < 6)
    throw DomainError("extract_relative_log_coefficient: need >= 6 grid points");
  for (double t : t_grid)
    if (!(t >= 0.01 && t <= 0.2))
      throw DomainError("extract_relative_log_coefficient: grid must lie in [0.01, 0.2]");
  const double E = const_field_E(b, series_tol);
  const double F = const_field_F(b, series_tol);
  const double t4log = theorem62_t4_log_coefficient(b);
  std::vector<std::pair<double, double>> samples;
  samples.reserve(t_grid.size());
  for (double t : t_grid) {
    const double rel = const_field_relative_trace(b, t, trace_tol).value;
    const double r = rel - E * t - F * t * t - t4log * t * t * t * t * std::log(t);
    samples.emplace_back(t, r / (t * t * t));
  }
  FitResult fit = fit_expansion(samples, {{Power(0), true}, {Power(0), false}});
  const double A = fit.coefficient(Power(0), true);
  const double B = fit.coefficient(Power(0), false);
  if (detail_out) *detail_out = std::move(fit);
  return {A, B};
}

}  // namespace heatlab

#endif  // HEATLAB_VERIFY_HPP
