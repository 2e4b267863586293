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

// NEON variants (AArch64 only; NEON is part of the base ISA there).

#include <arm_neon.h>

#include "stdassoc/kernels.hpp"

namespace stdassoc::kernels::neon {
namespace {

inline std::uint64_t count_vec(uint8x16_t v) {
  return vaddlvq_u8(vcntq_u8(v));
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t words) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2)
    total += count_vec(vreinterpretq_u8_u64(vld1q_u64(a + i)));
  for (; i < words; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(a[i]));
  return total;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    total += count_vec(vreinterpretq_u8_u64(v));
  }
  for (; i < words; ++i)
    total += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
  return total;
}

void and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2)
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < words; ++i) dst[i] = a[i] & b[i];
}

constexpr BitKernels kNeon{Isa::neon, &popcount, &and_popcount, &and_into};

}  // namespace

const BitKernels& kernels() { return kNeon; }

}  // namespace stdassoc::kernels::neon
