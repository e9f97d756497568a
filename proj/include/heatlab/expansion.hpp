// SPDX-License-Identifier: Apache-2.0
#ifndef HEATLAB_EXPANSION_HPP
#define HEATLAB_EXPANSION_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "heatlab/errors.hpp"
#include "heatlab/models.hpp"
#include "heatlab/util.hpp"

namespace heatlab {

/// One term coefficient * t^power * (log t)^{has_log}.
struct ExpansionTerm {
  Power power;
  bool has_log = false;
  double coefficient = 0.0;
};

/// A small-t expansion: ordered terms plus the order of the stated remainder.
struct Expansion {
  std::vector<ExpansionTerm> terms;
  Power remainder_order{0};
  std::optional<ModelSpec> model{};

  void add(Power p, bool has_log, double coefficient) {
    for (const auto& term : terms)
      if (term.power == p && term.has_log == has_log)
        throw DomainError("Expansion: duplicate (power, log) term");
    terms.push_back({p, has_log, coefficient});
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      if (a.power != b.power) return a.power < b.power;
      return a.has_log < b.has_log;
    });
  }

  void set_remainder(Power r) {
    for (const auto& term : terms)
      if (!(term.power < r))
        throw DomainError("Expansion: remainder order must exceed every term power");
    remainder_order = r;
  }

  double coefficient(Power p, bool has_log) const {
    for (const auto& term : terms)
      if (term.power == p && term.has_log == has_log) return term.coefficient;
    return 0.0;
  }

  double eval(double t) const {
    if (!(t > 0.0)) throw DomainError("Expansion::eval: t must be positive");
    const double lt = std::log(t);
    double sum = 0.0;
    for (const auto& term : terms) {
      double v = term.coefficient * std::pow(t, term.power.to_double());
      if (term.has_log) v *= lt;
      sum += v;
    }
    return sum;
  }
};

}  // namespace heatlab

#endif  // HEATLAB_EXPANSION_HPP
