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

#include <atomic>
#include <cstdlib>
#include <string>

#include "stdassoc/kernels.hpp"

namespace stdassoc::kernels {
namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(STDASSOC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Isa::neon:
#if defined(STDASSOC_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const BitKernels& kernels_for(Isa isa) {
  switch (isa) {
#if defined(STDASSOC_HAVE_AVX2)
    case Isa::avx2:
      return avx2::kernels();
#endif
#if defined(STDASSOC_HAVE_NEON)
    case Isa::neon:
      return neon::kernels();
#endif
    default:
      return scalar::kernels();
  }
}

const BitKernels* initial_choice() {
  if (const char* env = std::getenv("STDASSOC_ISA")) {
    const std::string want(env);
    for (Isa isa : available_isas())
      if (isa_name(isa) == want) return &kernels_for(isa);
  }
  return &kernels_for(available_isas().back());
}

std::atomic<const BitKernels*>& current() {
  static std::atomic<const BitKernels*> selected{initial_choice()};
  return selected;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::scalar};
  for (Isa isa : {Isa::neon, Isa::avx2})
    if (cpu_supports(isa)) out.push_back(isa);
  return out;
}

const BitKernels& active() { return *current().load(std::memory_order_relaxed); }

bool select(Isa isa) {
  if (!cpu_supports(isa)) return false;
  current().store(&kernels_for(isa), std::memory_order_relaxed);
  return true;
}

}  // namespace stdassoc::kernels
