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

#include "stdassoc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stdassoc/errors.hpp"

namespace stdassoc {
namespace {

constexpr double kSlack = 1e-12;

void require_marginals(const SupportTriple& t) {
  if (!(t.p_a > 0.0) || !(t.p_b > 0.0))
    throw DomainError("marginal support must be positive");
}

}  // namespace

void SupportTriple::validate() const {
  if (!(p_a > 0.0 && p_a <= 1.0) || !(p_b > 0.0 && p_b <= 1.0))
    throw DomainError("marginal supports must lie in (0, 1]");
  const double lo = std::max(0.0, p_a + p_b - 1.0);
  const double hi = std::min(p_a, p_b);
  if (p_ab < lo - kSlack || p_ab > hi + kSlack)
    throw DomainError("joint support " + std::to_string(p_ab) + " violates Frechet bounds [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::lift:
      return "lift";
    case Measure::cosine:
      return "cosine";
    case Measure::yule_q:
      return "yule_q";
    case Measure::gini:
      return "gini";
  }
  return "unknown";
}

double confidence(const SupportTriple& t) {
  if (!(t.p_a > 0.0)) throw DomainError("confidence undefined for zero antecedent support");
  return t.p_ab / t.p_a;
}

double lift(const SupportTriple& t) {
  require_marginals(t);
  return t.p_ab / (t.p_a * t.p_b);
}

double cosine(const SupportTriple& t) {
  require_marginals(t);
  return t.p_ab / std::sqrt(t.p_a * t.p_b);
}

double yule_q(const SupportTriple& t) {
  require_marginals(t);
  // Both cross products of the 2x2 table vanish: 0/0 in the odds-ratio form.
  // Checked on the cells because the two-term denominator can round to a tiny
  // non-zero value in exactly this configuration.
  const double both_absent = 1.0 - t.p_a - t.p_b + t.p_ab;
  if ((t.p_ab == 0.0 || both_absent == 0.0) && (t.p_a == t.p_ab || t.p_b == t.p_ab))
    throw DomainError("undefined odds configuration");
  const double indep = t.p_a * t.p_b;
  const double den = t.p_ab + indep - 2.0 * t.p_ab * (t.p_a + t.p_b - t.p_ab);
  if (den == 0.0) throw DomainError("undefined odds configuration");
  return (t.p_ab - indep) / den;
}

double gini(const SupportTriple& t) {
  if (!(t.p_a > 0.0 && t.p_a < 1.0))
    throw DomainError("gini requires 0 < P(A) < 1");
  const double d = t.p_ab - t.p_a * t.p_b;
  return 2.0 * d * d / (t.p_a * (1.0 - t.p_a));
}

double raw_measure(Measure m, const SupportTriple& t) {
  switch (m) {
    case Measure::lift:
      return lift(t);
    case Measure::cosine:
      return cosine(t);
    case Measure::yule_q:
      return yule_q(t);
    case Measure::gini:
      return gini(t);
  }
  throw DomainError("unknown measure");
}

}  // namespace stdassoc
