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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace stdassoc {

// Pair statistics behind Kendall's tau-b over n observations.
struct TauCounts {
  std::int64_t pairs = 0;     // n (n - 1) / 2
  std::int64_t ties_x = 0;    // pairs tied in x
  std::int64_t ties_y = 0;    // pairs tied in y
  std::int64_t ties_xy = 0;   // pairs tied in both
  std::int64_t concordant_minus_discordant = 0;
};

// O(n log n): sort by (x, y), then count y-inversions with a merge sort.
TauCounts tau_counts(std::span<const double> x, std::span<const double> y);

// (C - D) / sqrt((n0 - n1)(n0 - n2)). Throws DomainError on length mismatch,
// n < 2, or when either input is entirely tied ("undefined tau-b").
double tau_b(std::span<const double> x, std::span<const double> y);

// Final division shared by tau_b and any pair-counting routine, so that equal
// counts give bit-identical results.
double tau_b_from_counts(const TauCounts& c);

struct TauBReport {
  double overall = 0.0;
  // Absent where the block is too small or fully tied on one side.
  std::array<std::optional<double>, 10> by_decile;
  std::size_t n_rules = 0;
};

// Ranks rules by raw value ascending (ties by position), cuts the ranking into
// ten contiguous blocks whose sizes differ by at most one (earlier blocks take
// the remainder), and computes tau-b between raw and standardized values in
// each block and overall. Requires at least 10 rules.
TauBReport tau_b_by_decile(std::span<const double> raw, std::span<const double> standardized);

}  // namespace stdassoc
