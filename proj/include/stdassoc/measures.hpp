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

// Raw interestingness measures of a rule A => B, evaluated from its support
// triple (P(A), P(B), P(A,B)). Supports of negations are derived, never
// stored: P(A,~B) = pA - pAB, P(~A,B) = pB - pAB, P(~A,~B) = 1 - pA - pB + pAB.

#include <array>
#include <string_view>

namespace stdassoc {

struct SupportTriple {
  double p_a = 0.0;
  double p_b = 0.0;
  double p_ab = 0.0;

  // Throws DomainError unless 0 < pA, pB <= 1 and the Frechet bounds
  // max(0, pA + pB - 1) <= pAB <= min(pA, pB) hold (with 1e-12 slack).
  void validate() const;
};

enum class Measure { lift, cosine, yule_q, gini };

inline constexpr std::array<Measure, 4> kMeasures{Measure::lift, Measure::cosine,
                                                  Measure::yule_q, Measure::gini};

std::string_view measure_name(Measure m);

// P(B|A) = pAB / pA.
double confidence(const SupportTriple& t);

// pAB / (pA pB); 1 at independence.
double lift(const SupportTriple& t);

// pAB / sqrt(pA pB); sqrt(pA pB) at independence.
double cosine(const SupportTriple& t);

// Yule's Q via the two-term form
//   (pAB - pA pB) / (pAB + pA pB - 2 pAB (pA + pB - pAB)),
// algebraically equal to the odds-ratio form over the four cells. Throws
// DomainError("undefined odds configuration") when the denominator is zero,
// which happens when a marginal is 1 and the rule is at its maximum.
double yule_q(const SupportTriple& t);

// Gini index 2 (pAB - pA pB)^2 / (pA (1 - pA)); in [0, 1/2], zero iff
// independent. Requires 0 < pA < 1. Not symmetric in A and B.
double gini(const SupportTriple& t);

double raw_measure(Measure m, const SupportTriple& t);

}  // namespace stdassoc
