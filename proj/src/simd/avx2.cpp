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

// AVX2 kernels (4 x double). Compiled with -mavx2 only; selected at runtime.

#include <immintrin.h>

#include "simd_common.hpp"
#include "xgc/simd/kernels.hpp"

namespace xgc::simd {

namespace {

inline double combine(__m256d v) {
  alignas(32) double l[4];
  _mm256_store_pd(l, v);
  return (l[0] + l[1]) + (l[2] + l[3]);
}

void blur_row(const double* in, double* out, std::size_t width, const double* taps) {
  const std::size_t r = kBlurRadius;
  const std::size_t interior_end = width > r ? width - r : 0;
  std::size_t c = 0;
  for (; c < r && c < width; ++c) out[c] = detail::blur_at(in, c, width, taps);
  __m256d t[kBlurTaps];
  for (int k = 0; k < kBlurTaps; ++k) t[k] = _mm256_set1_pd(taps[k]);
  for (; c + 4 <= interior_end; c += 4) {
    const double* p = in + c - r;
    __m256d acc = _mm256_mul_pd(t[0], _mm256_loadu_pd(p));
    for (int k = 1; k < kBlurTaps; ++k) {
      acc = _mm256_add_pd(acc, _mm256_mul_pd(t[k], _mm256_loadu_pd(p + k)));
    }
    _mm256_storeu_pd(out + c, acc);
  }
  for (; c < width; ++c) out[c] = detail::blur_at(in, c, width, taps);
}

void blur_column(const double* const* rows, double* out, std::size_t width, const double* taps) {
  __m256d t[kBlurTaps];
  for (int k = 0; k < kBlurTaps; ++k) t[k] = _mm256_set1_pd(taps[k]);
  std::size_t c = 0;
  for (; c + 4 <= width; c += 4) {
    __m256d acc = _mm256_mul_pd(t[0], _mm256_loadu_pd(rows[0] + c));
    for (int k = 1; k < kBlurTaps; ++k) {
      acc = _mm256_add_pd(acc, _mm256_mul_pd(t[k], _mm256_loadu_pd(rows[k] + c)));
    }
    _mm256_storeu_pd(out + c, acc);
  }
  for (; c < width; ++c) {
    double acc = taps[0] * rows[0][c];
    for (int k = 1; k < kBlurTaps; ++k) acc = acc + taps[k] * rows[k][c];
    out[c] = acc;
  }
}

void multiply(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void subtract_scalar(const double* a, double value, double* out, std::size_t n) {
  const __m256d v = _mm256_set1_pd(value);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), v));
  for (; i < n; ++i) out[i] = a[i] - value;
}

void local_sigma(const double* mean, const double* second, double* sigma, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d m = _mm256_loadu_pd(mean + i);
    const __m256d var = _mm256_sub_pd(_mm256_loadu_pd(second + i), _mm256_mul_pd(m, m));
    _mm256_storeu_pd(sigma + i, _mm256_sqrt_pd(_mm256_max_pd(var, zero)));
  }
  for (; i < n; ++i) {
    const double var = second[i] - mean[i] * mean[i];
    sigma[i] = std::sqrt(var > 0.0 ? var : 0.0);
  }
}

void normalize(const double* centered, const double* mean, const double* sigma, double c,
               double* out, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d num = _mm256_sub_pd(_mm256_loadu_pd(centered + i), _mm256_loadu_pd(mean + i));
    const __m256d den = _mm256_add_pd(_mm256_loadu_pd(sigma + i), vc);
    _mm256_storeu_pd(out + i, _mm256_div_pd(num, den));
  }
  for (; i < n; ++i) out[i] = (centered[i] - mean[i]) / (sigma[i] + c);
}

void box_halve(const double* r0, const double* r1, double* out, std::size_t out_n) {
  const __m256d quarter = _mm256_set1_pd(0.25);
  std::size_t i = 0;
  for (; i + 4 <= out_n; i += 4) {
    // hadd yields pair sums in lane order 0,2,1,3; the permute restores 0..3.
    const __m256d top = _mm256_permute4x64_pd(
        _mm256_hadd_pd(_mm256_loadu_pd(r0 + 2 * i), _mm256_loadu_pd(r0 + 2 * i + 4)), 0xD8);
    const __m256d bottom = _mm256_permute4x64_pd(
        _mm256_hadd_pd(_mm256_loadu_pd(r1 + 2 * i), _mm256_loadu_pd(r1 + 2 * i + 4)), 0xD8);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_add_pd(top, bottom), quarter));
  }
  for (; i < out_n; ++i) {
    out[i] = ((r0[2 * i] + r0[2 * i + 1]) + (r1[2 * i] + r1[2 * i + 1])) * 0.25;
  }
}

Moments moments(const double* v, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d abs_acc = zero, sq_acc = zero, lsq = zero, rsq = zero, ln = zero, rn = zero;
  const std::size_t n4 = n - n % 4;
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d x = _mm256_loadu_pd(v + i);
    const __m256d sq = _mm256_mul_pd(x, x);
    const __m256d neg = _mm256_cmp_pd(x, zero, _CMP_LT_OQ);
    const __m256d pos = _mm256_cmp_pd(x, zero, _CMP_GT_OQ);
    abs_acc = _mm256_add_pd(abs_acc, _mm256_andnot_pd(sign, x));
    sq_acc = _mm256_add_pd(sq_acc, sq);
    lsq = _mm256_add_pd(lsq, _mm256_and_pd(neg, sq));
    rsq = _mm256_add_pd(rsq, _mm256_and_pd(pos, sq));
    ln = _mm256_add_pd(ln, _mm256_and_pd(neg, one));
    rn = _mm256_add_pd(rn, _mm256_and_pd(pos, one));
  }
  Moments m;
  m.sum_abs = combine(abs_acc);
  m.sum_sq = combine(sq_acc);
  m.left_sum_sq = combine(lsq);
  m.right_sum_sq = combine(rsq);
  m.left_count = combine(ln);
  m.right_count = combine(rn);
  detail::moments_tail(v + n4, n - n4, m);
  return m;
}

SumSq sum_sq(const double* v, std::size_t n) {
  __m256d s = _mm256_setzero_pd(), q = _mm256_setzero_pd();
  const std::size_t n4 = n - n % 4;
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d x = _mm256_loadu_pd(v + i);
    s = _mm256_add_pd(s, x);
    q = _mm256_add_pd(q, _mm256_mul_pd(x, x));
  }
  SumSq r{combine(s), combine(q)};
  for (std::size_t i = n4; i < n; ++i) {
    r.sum = r.sum + v[i];
    r.sum_sq = r.sum_sq + v[i] * v[i];
  }
  return r;
}

double squared_distance(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n4 = n - n % 4;
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double r = combine(acc);
  for (std::size_t i = n4; i < n; ++i) {
    const double d = a[i] - b[i];
    r = r + d * d;
  }
  return r;
}

}  // namespace

const Kernels& detail::avx2_kernels() {
  static const Kernels k{
      Backend::kAvx2, &blur_row,  &blur_column, &multiply, &subtract_scalar, &local_sigma,
      &normalize,     &box_halve, &moments,     &sum_sq,   &squared_distance,
  };
  return k;
}

}  // namespace xgc::simd
