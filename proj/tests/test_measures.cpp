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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stdassoc/errors.hpp"
#include "stdassoc/measures.hpp"

using namespace stdassoc;
using doctest::Approx;

namespace {

// Uniform valid triple with 0 < pA, pB < 1 and pAB inside the Frechet window.
SupportTriple random_triple(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.001, 0.999);
  const double pa = u(rng), pb = u(rng);
  const double lo = std::max(0.0, pa + pb - 1.0), hi = std::min(pa, pb);
  return {pa, pb, lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng)};
}

}  // namespace

TEST_CASE("confidence") {
  CHECK(confidence({0.5, 1.0, 0.5}) == 1.0);
  // Published rule row: support 0.204, confidence 0.411.
  CHECK(confidence({0.496, 0.211, 0.204}) == Approx(0.411).epsilon(1e-3));
  CHECK(confidence({0.4, 0.5, 0.2}) == 0.5);
  CHECK_THROWS_AS(confidence({0.0, 0.5, 0.0}), DomainError);
}

TEST_CASE("lift") {
  CHECK(lift({0.4, 0.5, 0.2}) == Approx(1.0).epsilon(1e-15));
  CHECK(lift({0.5, 0.5, 0.4875}) == Approx(1.95).epsilon(1e-15));
  CHECK(lift({0.3, 0.2, 0.12}) == Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(lift({0.0, 0.5, 0.0}), DomainError);
}

TEST_CASE("cosine") {
  CHECK(cosine({0.3, 0.3, 0.3}) == Approx(1.0).epsilon(1e-15));
  CHECK(cosine({0.25, 0.64, 0.16}) == Approx(0.4).epsilon(1e-15));
  CHECK(cosine({0.5, 0.2, 0.1}) == Approx(0.316228).epsilon(1e-6));
  CHECK_THROWS_AS(cosine({0.5, 0.0, 0.0}), DomainError);
}

TEST_CASE("yule_q") {
  CHECK(yule_q({0.4, 0.5, 0.2}) == Approx(0.0).epsilon(1e-15));
  CHECK(yule_q({0.5, 0.5, 0.4}) == Approx(0.15 / 0.17).epsilon(1e-14));
  CHECK(yule_q({0.5, 0.5, 0.4}) == Approx(0.882353).epsilon(1e-6));
  CHECK(yule_q({0.3, 0.5, 0.3}) == Approx(1.0).epsilon(1e-15));
  CHECK(yule_q({0.3, 0.5, 0.0}) == Approx(-1.0).epsilon(1e-15));
  // pAB = pA + pB - 1: no transaction lacks both.
  CHECK(yule_q({0.75, 0.5, 0.25}) == Approx(-1.0).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(yule_q({1.0, 0.3, 0.3}), "undefined odds configuration", DomainError);
}

TEST_CASE("gini") {
  CHECK(gini({0.4, 0.5, 0.2}) == Approx(0.0).epsilon(1e-15));
  CHECK(gini({0.5, 0.5, 0.5}) == Approx(0.5).epsilon(1e-15));
  CHECK(gini({0.5, 0.5, 0.4}) == Approx(0.18).epsilon(1e-14));
  CHECK_THROWS_AS(gini({1.0, 0.5, 0.5}), DomainError);
  CHECK_THROWS_AS(gini({0.0, 0.5, 0.0}), DomainError);
}

TEST_CASE("triple validation enforces Frechet bounds") {
  CHECK_NOTHROW(SupportTriple({0.5, 0.5, 0.0}).validate());
  CHECK_THROWS_AS(SupportTriple({0.5, 0.5, 0.6}).validate(), DomainError);
  CHECK_THROWS_AS(SupportTriple({0.8, 0.8, 0.5}).validate(), DomainError);
  CHECK_THROWS_AS(SupportTriple({0.0, 0.8, 0.0}).validate(), DomainError);
}

TEST_CASE("property: alternative algebraic forms agree") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const auto t = random_triple(rng);
    CAPTURE(t.p_a);
    CAPTURE(t.p_b);
    CAPTURE(t.p_ab);
    CHECK(std::abs(yule_q(t) - oracle::yule_q_cells(t.p_a, t.p_b, t.p_ab)) <= 1e-12);
    CHECK(std::abs(gini(t) - oracle::gini_conditional(t.p_a, t.p_b, t.p_ab)) <= 1e-12);
    CHECK(std::abs(gini(t) - oracle::gini_alternate(t.p_a, t.p_b, t.p_ab)) <= 1e-12);
  }
}

TEST_CASE("property: ranges, symmetry and monotonicity") {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 2000; ++i) {
    const auto t = random_triple(rng);
    const SupportTriple swapped{t.p_b, t.p_a, t.p_ab};
    CHECK(lift(t) >= 0.0);
    CHECK(cosine(t) >= 0.0);
    CHECK(cosine(t) <= 1.0 + 1e-15);
    CHECK(std::abs(yule_q(t)) <= 1.0 + 1e-12);
    CHECK(gini(t) >= 0.0);
    CHECK(gini(t) <= 0.5 + 1e-15);
    CHECK(lift(swapped) == Approx(lift(t)).epsilon(1e-14));
    CHECK(cosine(swapped) == Approx(cosine(t)).epsilon(1e-14));
    CHECK(yule_q(swapped) == Approx(yule_q(t)).epsilon(1e-12));

    const double hi = std::min(t.p_a, t.p_b);
    const SupportTriple up{t.p_a, t.p_b, t.p_ab + (hi - t.p_ab) * 0.5};
    if (up.p_ab > t.p_ab * (1 + 1e-9) + 1e-12) {
      CHECK(lift(up) > lift(t));
      CHECK(cosine(up) > cosine(t));
      CHECK(yule_q(up) > yule_q(t));
    }
  }
}

TEST_CASE("gini is not symmetric") {
  const SupportTriple t{0.2, 0.6, 0.2};
  CHECK(gini(t) != Approx(gini({0.6, 0.2, 0.2})));
}

TEST_CASE("cosine is null invariant, lift is not") {
  // nAB = 12, nA = 30, nB = 20 over 100 then 500 transactions.
  auto at = [](double n) { return SupportTriple{30 / n, 20 / n, 12 / n}; };
  CHECK(cosine(at(100)) == Approx(cosine(at(500))).epsilon(1e-15));
  CHECK(lift(at(100)) != Approx(lift(at(500))));
}

TEST_CASE("raw_measure dispatch") {
  const SupportTriple t{0.5, 0.5, 0.4};
  CHECK(raw_measure(Measure::lift, t) == lift(t));
  CHECK(raw_measure(Measure::cosine, t) == cosine(t));
  CHECK(raw_measure(Measure::yule_q, t) == yule_q(t));
  CHECK(raw_measure(Measure::gini, t) == gini(t));
  CHECK(measure_name(Measure::yule_q) == "yule_q");
}
