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

#pragma once

// Pieces shared verbatim by every backend so that borders and tails are
// evaluated identically.

#include <cmath>
#include <cstddef>

#include "xgc/simd/kernels.hpp"

namespace xgc::simd::detail {

inline std::size_t reflect101(std::ptrdiff_t i, std::size_t n) {
  const auto last = static_cast<std::ptrdiff_t>(n) - 1;
  if (i < 0) return static_cast<std::size_t>(-i);
  if (i > last) return static_cast<std::size_t>(2 * last - i);
  return static_cast<std::size_t>(i);
}

inline double blur_at(const double* in, std::size_t c, std::size_t width, const double* taps) {
  const auto base = static_cast<std::ptrdiff_t>(c) - kBlurRadius;
  double acc = taps[0] * in[reflect101(base, width)];
  for (int k = 1; k < kBlurTaps; ++k) acc = acc + taps[k] * in[reflect101(base + k, width)];
  return acc;
}

inline double combine_lanes(const double (&l)[4]) { return (l[0] + l[1]) + (l[2] + l[3]); }

inline void moments_tail(const double* v, std::size_t n, Moments& m) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = v[i];
    const double sq = x * x;
    m.sum_abs = m.sum_abs + std::fabs(x);
    m.sum_sq = m.sum_sq + sq;
    if (x < 0.0) {
      m.left_sum_sq = m.left_sum_sq + sq;
      m.left_count = m.left_count + 1.0;
    } else if (x > 0.0) {
      m.right_sum_sq = m.right_sum_sq + sq;
      m.right_count = m.right_count + 1.0;
    }
  }
}

}  // namespace xgc::simd::detail
