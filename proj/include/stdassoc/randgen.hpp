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

#include "stdassoc/transactions.hpp"

namespace stdassoc {

// Independent-items model: every (transaction, item) cell is present with
// probability p, independently of all others.
struct RandomSpec {
  std::size_t n_transactions = 0;
  std::size_t n_items = 0;
  double p = 0.01;
  std::uint64_t seed = 0;

  void validate() const;
};

// SplitMix64 output function.
std::uint64_t splitmix64_mix(std::uint64_t z);

// Bit-stream contract. Cells are numbered c = t * n_items + i in row-major
// order. Cell c draws
//   u = (splitmix64_mix(seed + (c + 1) * 0x9E3779B97F4A7C15) >> 11) * 2^-53
// which is the (c+1)-th output of a SplitMix64 generator seeded with `seed`,
// and is present iff u < p. Since each draw depends only on (seed, c), any
// partition of the transactions reproduces the sequential stream exactly.
double cell_uniform(std::uint64_t seed, std::uint64_t cell);

// Item labels are item_0000 ... (zero-padded to at least four digits).
// Empty transactions are kept. threads only affects speed.
TransactionSet generate(const RandomSpec& spec, unsigned threads = 1);

}  // namespace stdassoc
