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
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "stdassoc/kernels.hpp"

using namespace stdassoc;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<std::uint64_t> v(n);
  for (auto& w : v) {
    w = rng();
    for (int i = 0; i < density; ++i) w &= rng();  // sparser bits
  }
  return v;
}

struct IsaGuard {
  const kernels::BitKernels& saved = kernels::active();
  ~IsaGuard() { kernels::select(saved.isa); }
};

}  // namespace

TEST_CASE("scalar is always available and listed first") {
  const auto isas = kernels::available_isas();
  REQUIRE(!isas.empty());
  CHECK(isas.front() == kernels::Isa::scalar);
  MESSAGE("active kernels: " << kernels::isa_name(kernels::active().isa));
}

TEST_CASE("every variant matches the scalar reference, including tails") {
  std::mt19937_64 rng(7);
  const auto& ref = kernels::scalar::kernels();
  for (auto isa : kernels::available_isas()) {
    IsaGuard guard;
    REQUIRE(kernels::select(isa));
    const auto& k = kernels::active();
    CAPTURE(kernels::isa_name(isa));
    for (std::size_t words : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100, 313, 1563}) {
      for (int density : {0, 2, 5}) {
        const auto a = random_words(rng, words, density);
        const auto b = random_words(rng, words, density);
        CHECK(k.popcount(a.data(), words) == ref.popcount(a.data(), words));
        CHECK(k.and_popcount(a.data(), b.data(), words) == ref.and_popcount(a.data(), b.data(), words));
        std::vector<std::uint64_t> d1(words), d2(words);
        k.and_into(d1.data(), a.data(), b.data(), words);
        ref.and_into(d2.data(), a.data(), b.data(), words);
        CHECK(d1 == d2);
      }
    }
  }
}

TEST_CASE("saturated words count exactly") {
  // All-ones input stresses the byte accumulators in the vector paths.
  for (auto isa : kernels::available_isas()) {
    IsaGuard guard;
    REQUIRE(kernels::select(isa));
    std::vector<std::uint64_t> ones(1000, ~std::uint64_t{0});
    CHECK(kernels::popcount(ones) == 64000);
    CHECK(kernels::and_popcount(ones, ones) == 64000);
  }
}

TEST_CASE("and_into may alias its first operand") {
  std::mt19937_64 rng(11);
  for (auto isa : kernels::available_isas()) {
    IsaGuard guard;
    REQUIRE(kernels::select(isa));
    auto a = random_words(rng, 37, 0);
    const auto b = random_words(rng, 37, 0);
    auto expect = a;
    for (std::size_t i = 0; i < a.size(); ++i) expect[i] &= b[i];
    kernels::and_into(a, a, b);
    CHECK(a == expect);
  }
}

TEST_CASE("support counts are identical under every variant") {
  std::mt19937_64 rng(3);
  const auto ts = oracle::random_set(rng, 8, 300);
  for (auto isa : kernels::available_isas()) {
    IsaGuard guard;
    REQUIRE(kernels::select(isa));
    for (std::uint32_t a = 0; a < 8; ++a)
      for (std::uint32_t b = a + 1; b < 8; ++b)
        for (std::uint32_t c = b + 1; c < 8; ++c)
          CHECK(ts.count(Itemset{a, b, c}) == oracle::count(ts, {a, b, c}));
  }
}

TEST_CASE("selecting an unavailable variant is refused") {
  IsaGuard guard;
  const auto isas = kernels::available_isas();
  for (auto isa : {kernels::Isa::avx2, kernels::Isa::neon}) {
    const bool available = std::find(isas.begin(), isas.end(), isa) != isas.end();
    CHECK(kernels::select(isa) == available);
  }
}
