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

// Bitmap kernels used by support counting. Every kernel has a portable scalar
// reference implementation plus ISA-specific variants (AVX2 on x86-64, NEON on
// AArch64). Variants must return results identical to the scalar reference;
// tests/test_kernels.cpp checks that for every compiled-in variant.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace stdassoc::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct BitKernels {
  Isa isa;
  // popcount(a[0..words))
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t words);
  // popcount(a & b)
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words);
  // dst = a & b
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* a,
                   const std::uint64_t* b, std::size_t words);
};

namespace scalar {
const BitKernels& kernels();
}
#if defined(STDASSOC_HAVE_AVX2)
namespace avx2 {
const BitKernels& kernels();
}
#endif
#if defined(STDASSOC_HAVE_NEON)
namespace neon {
const BitKernels& kernels();
}
#endif

// Variants compiled in and supported by the running CPU. Scalar is always
// first.
std::vector<Isa> available_isas();

// Currently selected variant. The initial choice is the widest available ISA,
// unless the STDASSOC_ISA environment variable names another one ("scalar",
// "avx2", "neon").
const BitKernels& active();

// Returns false (and leaves the selection unchanged) if isa is unavailable.
bool select(Isa isa);

inline std::uint64_t popcount(std::span<const std::uint64_t> a) {
  return active().popcount(a.data(), a.size());
}

inline std::uint64_t and_popcount(std::span<const std::uint64_t> a,
                                  std::span<const std::uint64_t> b) {
  return active().and_popcount(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline void and_into(std::span<std::uint64_t> dst,
                     std::span<const std::uint64_t> a,
                     std::span<const std::uint64_t> b) {
  active().and_into(dst.data(), a.data(), b.data(), dst.size());
}

}  // namespace stdassoc::kernels
