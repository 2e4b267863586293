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

#include "stdassoc/randgen.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "stdassoc/errors.hpp"

namespace stdassoc {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::string item_label(std::size_t i, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "item_%0*zu", width, i);
  return buf;
}

}  // namespace

void RandomSpec::validate() const {
  if (n_transactions == 0) throw DomainError("number of transactions must be positive");
  if (n_items == 0) throw DomainError("number of items must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("item probability must lie in (0, 1)");
}

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double cell_uniform(std::uint64_t seed, std::uint64_t cell) {
  return static_cast<double>(splitmix64_mix(seed + (cell + 1) * kGolden) >> 11) * 0x1.0p-53;
}

TransactionSet generate(const RandomSpec& spec, unsigned threads) {
  spec.validate();
  const std::size_t n = spec.n_transactions;
  const std::size_t k = spec.n_items;

  int width = 4;
  for (std::size_t top = k - 1; top >= 10000; top /= 10) ++width;
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i) labels.push_back(item_label(i, width));

  std::vector<Transaction> rows(n);
  auto fill = [&](std::size_t begin, std::size_t end) {
    std::vector<ItemId> ids;
    for (std::size_t t = begin; t < end; ++t) {
      ids.clear();
      const std::uint64_t base = static_cast<std::uint64_t>(t) * k;
      for (std::size_t i = 0; i < k; ++i)
        if (cell_uniform(spec.seed, base + i) < spec.p) ids.push_back(static_cast<ItemId>(i));
      rows[t] = Transaction(ids);
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
  if (workers == 1) {
    fill(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk)
      pool.emplace_back(fill, begin, std::min(n, begin + chunk));
  }
  return TransactionSet(ItemCatalog(std::move(labels)), std::move(rows));
}

}  // namespace stdassoc
