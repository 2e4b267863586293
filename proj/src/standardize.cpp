// Copyright 2026 The stdassoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stdassoc/standardize.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "stdassoc/errors.hpp"

namespace stdassoc {
namespace {

void require_marginals(double p_a, double p_b) {
  if (!(p_a > 0.0 && p_a <= 1.0) || !(p_b > 0.0 && p_b <= 1.0))
    throw DomainError("marginal supports must lie in (0, 1]");
}

double max_of(std::initializer_list<double> xs) { return std::max(xs); }

// Yule's Q at joint support x, or -inf when x is below the
// Frechet floor (see header).
double yule_q_at(double x, double p_a, double p_b) {
  if (x < p_a + p_b - 1.0) return -INFINITY;
  const double den = x + p_a * p_b - 2.0 * x * (p_a + p_b - x);
  if (den == 0.0) throw DomainError("undefined bound configuration");
  return (x - p_a * p_b) / den;
}

}  // namespace

Bounds lift_bounds(double p_a, double p_b, const Thresholds& th) {
  require_marginals(p_a, p_b);
  const double s = th.min_support;
  const double k = th.min_confidence;
  const double indep = p_a * p_b;
  const double upper = 1.0 / std::max(p_a, p_b);
  const double lower = max_of({(p_a + p_b - 1.0) / indep, 4.0 * s / ((1.0 + s) * (1.0 + s)),
                               s / indep, k / p_b});
  return Bounds::make(lower, upper);
}

Bounds cosine_bounds(double p_a, double p_b, const Thresholds& th) {
  require_marginals(p_a, p_b);
  const double s = th.min_support;
  const double k = th.min_confidence;
  const double root = std::sqrt(p_a * p_b);
  const double upper = std::sqrt(std::min(p_a, p_b) / std::max(p_a, p_b));
  const double lower = max_of({2.0 * s / (1.0 + s), s / root, (p_a + p_b - 1.0) / root,
                               std::sqrt(k * s / p_b), k * std::sqrt(p_a / p_b)});
  return Bounds::make(lower, upper);
}

Bounds yule_q_bounds(double p_a, double p_b, const Thresholds& th) {
  require_marginals(p_a, p_b);
  const double s = th.min_support;
  const double k = th.min_confidence;
  double lower = -1.0;
  lower = std::max(lower, yule_q_at(s, p_a, p_b));
  // Same value as yule_q_at(k * pA), with pA cancelled from both parts.
  if (k * p_a >= p_a + p_b - 1.0) {
    const double den = k + p_b - 2.0 * k * (p_a + p_b - k * p_a);
    if (den == 0.0) throw DomainError("undefined bound configuration");
    lower = std::max(lower, (k - p_b) / den);
  }
  return Bounds::make(lower, 1.0);
}

Bounds gini_bounds(double p_a, double p_b, double p_ab, const Thresholds& th) {
  require_marginals(p_a, p_b);
  if (!(p_a < 1.0)) throw DomainError("gini bounds require 0 < P(A) < 1");
  const double indep = p_a * p_b;
  const double scale = p_a * (1.0 - p_a);
  auto g = [&](double x) {
    const double d = x - indep;
    return 2.0 * d * d / scale;
  };
  const double floor = max_of({th.min_support, th.min_confidence * p_a, p_a + p_b - 1.0});
  if (p_ab >= indep) return Bounds::make(g(std::max(floor, indep)), g(std::min(p_a, p_b)));
  return Bounds::make(0.0, g(floor));
}

Bounds measure_bounds(Measure m, const SupportTriple& t, const Thresholds& th) {
  switch (m) {
    case Measure::lift:
      return lift_bounds(t.p_a, t.p_b, th);
    case Measure::cosine:
      return cosine_bounds(t.p_a, t.p_b, th);
    case Measure::yule_q:
      return yule_q_bounds(t.p_a, t.p_b, th);
    case Measure::gini:
      return gini_bounds(t.p_a, t.p_b, t.p_ab, th);
  }
  throw DomainError("unknown measure");
}

StandardizedScore standardize(double raw, const Bounds& b) {
  StandardizedScore out{raw, b, 0.0, false};
  const double tol =
      kBoundsTolerance * std::max({1.0, std::abs(b.lower), std::abs(b.upper)});
  const double width = b.upper - b.lower;
  if (width <= kDegenerateWidth) {
    if (-width > tol)
      throw BoundsViolation("empty bounds window [" + std::to_string(b.lower) + ", " +
                            std::to_string(b.upper) + "]");
    out.value = 1.0;
    out.degenerate = true;
    out.bounds.degenerate = true;
    return out;
  }
  if (!(raw >= b.lower - tol && raw <= b.upper + tol))
    throw BoundsViolation("bounds violation: raw " + std::to_string(raw) + " outside [" +
                          std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]");
  out.value = std::clamp((raw - b.lower) / width, 0.0, 1.0);
  return out;
}

MeasureReport score_rule(const SupportTriple& t, const Thresholds& th) {
  t.validate();
  MeasureReport report;
  for (std::size_t i = 0; i < kMeasures.size(); ++i) {
    auto& slot = report[i];
    slot.measure = kMeasures[i];
    try {
      const double raw = raw_measure(slot.measure, t);
      slot.score = standardize(raw, measure_bounds(slot.measure, t, th));
    } catch (const std::exception& e) {
      slot.error = e.what();
    }
  }
  return report;
}

std::vector<CurvePoint> lift_bound_curve(const std::vector<double>& grid) {
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (double x : grid) {
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("curve grid points must lie in (0, 1]");
    out.push_back({x, 1.0 / x, std::max(0.0, 2.0 * x - 1.0),
                   std::max(0.0, (2.0 * x - 1.0) / (x * x))});
  }
  return out;
}

}  // namespace stdassoc
