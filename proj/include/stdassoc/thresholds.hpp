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

#include <cstddef>
#include <cstdint>

namespace stdassoc {

// Minimum support (sigma) and minimum confidence (kappa), both fractions.
// Rules are only reported when P(A,B) >= sigma and P(A,B)/P(A) >= kappa.
struct Thresholds {
  double min_support = 0.0;
  double min_confidence = 0.0;

  // sigma = kappa = 1/n, the weakest thresholds that can be meaningful over
  // n transactions.
  static Thresholds defaults_for(std::size_t n);

  // Throws DomainError unless both lie in (0, 1].
  void validate() const;
  // As validate(), and additionally both must be >= 1/n.
  void validate(std::size_t n) const;

  // Smallest integer count c with c / n >= sigma (at least 1). Absorbs
  // rounding in sigma * n, so sigma = 1/n maps to 1.
  std::uint64_t min_support_count(std::size_t n) const;

  // Exact-count confidence test: count_ab / count_a >= kappa.
  bool confident(std::uint64_t count_ab, std::uint64_t count_a) const;
};

}  // namespace stdassoc
