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

#pragma once

// Attainable bounds of each raw measure given a rule's marginals and the
// mining thresholds, and rescaling of raw values into [0, 1]:
//
//   standardized = (raw - lower) / (upper - lower)
//
// lower and upper are the smallest and largest values the measure can take
// for any rule with the same P(A), P(B) that survives minimum support sigma
// and minimum confidence kappa.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "stdassoc/measures.hpp"
#include "stdassoc/thresholds.hpp"

namespace stdassoc {

// Windows narrower than this are degenerate.
inline constexpr double kDegenerateWidth = 1e-12;
// Containment slack, relative to max(1, |lower|, |upper|).
inline constexpr double kBoundsTolerance = 1e-9;

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
  bool degenerate = false;

  static Bounds make(double lower, double upper) {
    return {lower, upper, upper - lower <= kDegenerateWidth};
  }
};

struct StandardizedScore {
  double raw = 0.0;
  Bounds bounds;
  double value = 0.0;
  bool degenerate = false;
};

// upper = 1 / max(pA, pB)
// lower = max((pA + pB - 1) / (pA pB), 4 sigma / (1 + sigma)^2,
//             sigma / (pA pB), kappa / pB)
Bounds lift_bounds(double p_a, double p_b, const Thresholds& th);

// upper = sqrt(min(pA, pB) / max(pA, pB))
// lower = max(2 sigma / (1 + sigma), sigma / sqrt(pA pB),
//             (pA + pB - 1) / sqrt(pA pB), sqrt(kappa sigma / pB),
//             kappa sqrt(pA / pB))
Bounds cosine_bounds(double p_a, double p_b, const Thresholds& th);

// upper = 1
// lower = max(-1, Q at P(A,B) = sigma, Q at P(A,B) = kappa pA), where
//   Q(sigma)    = (sigma - pA pB) / (sigma + pA pB - 2 sigma (pA + pB - sigma))
//   Q(kappa pA) = (kappa - pB) / (kappa + pB - 2 kappa (pA + pB - kappa pA))
// Q is increasing in P(A,B) over the feasible range, so each term is a lower
// bound whenever its evaluation point is itself feasible (>= pA + pB - 1).
// Below that floor the rational expression leaves the odds-ratio domain and
// the term is skipped; the floor itself has Q = -1, which the first term
// already covers.
Bounds yule_q_bounds(double p_a, double p_b, const Thresholds& th);

// Branch on the sign of pAB - pA pB (equality takes the >= branch). With
// l = max(sigma, kappa pA, pA + pB - 1) and g(x) = 2 (x - pA pB)^2 / (pA (1 - pA)):
//   pAB >= pA pB:  upper = g(min(pA, pB)),  lower = g(max(l, pA pB))
//   pAB <  pA pB:  upper = g(l),            lower = 0
Bounds gini_bounds(double p_a, double p_b, double p_ab, const Thresholds& th);

Bounds measure_bounds(Measure m, const SupportTriple& t, const Thresholds& th);

// Degenerate window: value 1 with the flag set. Otherwise raw must lie within
// the window up to kBoundsTolerance (BoundsViolation if not) and the result
// is clamped to [0, 1].
StandardizedScore standardize(double raw, const Bounds& b);

// One measure's outcome for a rule. error is set (and score meaningless) when
// the measure or its bounds are undefined for this triple, or the raw value
// violates the bounds.
struct MeasureScore {
  Measure measure = Measure::lift;
  StandardizedScore score;
  std::string error;

  bool ok() const { return error.empty(); }
};

using MeasureReport = std::array<MeasureScore, 4>;

// Scores all four measures. Per-measure failures are recorded in the report
// rather than thrown; an invalid triple still throws DomainError.
MeasureReport score_rule(const SupportTriple& t, const Thresholds& th);

struct CurvePoint {
  double x = 0.0;
  double upper = 0.0;
  double lower = 0.0;
  // lift_bounds lower at pA = pB = x as the thresholds vanish:
  // max(0, (2x - 1) / x^2). Never below `lower`; equal at x = 1.
  double attainable_lower = 0.0;
};

// Lift envelope when P(A) = P(B) = x, as traditionally plotted:
// upper = 1/x, lower = max(0, 2x - 1). Throws DomainError unless 0 < x <= 1.
std::vector<CurvePoint> lift_bound_curve(const std::vector<double>& grid);

}  // namespace stdassoc
