// Copyright 2026 The xgcvqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>

#include "xgc/simd/kernels.hpp"

namespace xgc::simd {

namespace {

bool cpu_has_avx2() {
#if defined(XGC_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const Kernels& select() {
  const char* forced = std::getenv("XGC_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") return detail::scalar_kernels();
#if defined(XGC_HAVE_AVX2_TU)
  if (cpu_has_avx2()) return detail::avx2_kernels();
#endif
  return detail::scalar_kernels();
}

}  // namespace

const Kernels& active() {
  static const Kernels& chosen = select();
  return chosen;
}

const Kernels* kernels_for(Backend backend) {
  switch (backend) {
    case Backend::kScalar: return &detail::scalar_kernels();
    case Backend::kAvx2:
#if defined(XGC_HAVE_AVX2_TU)
      if (cpu_has_avx2()) return &detail::avx2_kernels();
#endif
      return nullptr;
  }
  return nullptr;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::kScalar};
  if (kernels_for(Backend::kAvx2) != nullptr) out.push_back(Backend::kAvx2);
  return out;
}

std::string_view name(Backend backend) {
  switch (backend) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
  }
  return "unknown";
}

}  // namespace xgc::simd
