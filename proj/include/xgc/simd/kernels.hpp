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

// Data-parallel inner loops behind the NSS feature extractor and the
// classifier. Every backend evaluates each output with the same sequence of
// IEEE operations as the scalar reference: element-wise kernels match it
// bit for bit, and reductions accumulate in four interleaved lanes that are
// combined as (l0 + l1) + (l2 + l3), so reductions match bit for bit too.
// Builds must not contract multiply-add pairs (-ffp-contract=off).

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace xgc::simd {

enum class Backend { kScalar, kAvx2 };

inline constexpr int kBlurTaps = 7;
inline constexpr int kBlurRadius = kBlurTaps / 2;

/// Sums over a span, as needed for generalized-Gaussian moment matching.
struct Moments {
  double sum_abs = 0.0;
  double sum_sq = 0.0;
  double left_sum_sq = 0.0;   // over negative values
  double right_sum_sq = 0.0;  // over positive values
  double left_count = 0.0;
  double right_count = 0.0;
};

struct SumSq {
  double sum = 0.0;
  double sum_sq = 0.0;
};

struct Kernels {
  Backend backend;

  /// out[c] = sum_k taps[k] * in[reflect(c + k - 3)], reflect-101 borders.
  /// Requires width >= 4.
  void (*blur_row)(const double* in, double* out, std::size_t width, const double* taps);

  /// out[c] = sum_k taps[k] * rows[k][c] for seven row pointers.
  void (*blur_column)(const double* const* rows, double* out, std::size_t width,
                      const double* taps);

  void (*multiply)(const double* a, const double* b, double* out, std::size_t n);

  /// out = a - value
  void (*subtract_scalar)(const double* a, double value, double* out, std::size_t n);

  /// sigma = sqrt(max(0, second - mean^2))
  void (*local_sigma)(const double* mean, const double* second, double* sigma, std::size_t n);

  /// out = (centered - mean) / (sigma + c)
  void (*normalize)(const double* centered, const double* mean, const double* sigma, double c,
                    double* out, std::size_t n);

  /// out[i] = (r0[2i] + r0[2i+1] + r1[2i] + r1[2i+1]) * 0.25
  void (*box_halve)(const double* r0, const double* r1, double* out, std::size_t out_n);

  Moments (*moments)(const double* v, std::size_t n);
  SumSq (*sum_sq)(const double* v, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
};

/// Kernels selected once at startup: the widest backend the CPU supports,
/// unless XGC_SIMD=scalar is set in the environment.
const Kernels& active();

/// Specific backend, or nullptr when not compiled in or unsupported here.
const Kernels* kernels_for(Backend backend);

std::vector<Backend> available_backends();

std::string_view name(Backend backend);

namespace detail {
const Kernels& scalar_kernels();
#if defined(XGC_HAVE_AVX2_TU)
const Kernels& avx2_kernels();
#endif
}  // namespace detail

}  // namespace xgc::simd
