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

// Reference kernels. The lane-striped reductions below define the summation
// order that the vector backends reproduce.

#include <cmath>

#include "simd_common.hpp"
#include "xgc/simd/kernels.hpp"

namespace xgc::simd {

namespace {

void blur_row(const double* in, double* out, std::size_t width, const double* taps) {
  for (std::size_t c = 0; c < width; ++c) {
    out[c] = detail::blur_at(in, c, width, taps);
  }
}

void blur_column(const double* const* rows, double* out, std::size_t width, const double* taps) {
  for (std::size_t c = 0; c < width; ++c) {
    double acc = taps[0] * rows[0][c];
    for (int k = 1; k < kBlurTaps; ++k) acc = acc + taps[k] * rows[k][c];
    out[c] = acc;
  }
}

void multiply(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void subtract_scalar(const double* a, double value, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - value;
}

void local_sigma(const double* mean, const double* second, double* sigma, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double var = second[i] - mean[i] * mean[i];
    sigma[i] = std::sqrt(var > 0.0 ? var : 0.0);
  }
}

void normalize(const double* centered, const double* mean, const double* sigma, double c,
               double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = (centered[i] - mean[i]) / (sigma[i] + c);
}

void box_halve(const double* r0, const double* r1, double* out, std::size_t out_n) {
  for (std::size_t i = 0; i < out_n; ++i) {
    out[i] = ((r0[2 * i] + r0[2 * i + 1]) + (r1[2 * i] + r1[2 * i + 1])) * 0.25;
  }
}

Moments moments(const double* v, std::size_t n) {
  double abs_l[4] = {}, sq_l[4] = {}, lsq_l[4] = {}, rsq_l[4] = {}, ln_l[4] = {}, rn_l[4] = {};
  const std::size_t n4 = n - n % 4;
  for (std::size_t i = 0; i < n4; ++i) {
    const std::size_t j = i % 4;
    const double x = v[i];
    const double sq = x * x;
    abs_l[j] = abs_l[j] + std::fabs(x);
    sq_l[j] = sq_l[j] + sq;
    lsq_l[j] = lsq_l[j] + (x < 0.0 ? sq : 0.0);
    rsq_l[j] = rsq_l[j] + (x > 0.0 ? sq : 0.0);
    ln_l[j] = ln_l[j] + (x < 0.0 ? 1.0 : 0.0);
    rn_l[j] = rn_l[j] + (x > 0.0 ? 1.0 : 0.0);
  }
  Moments m;
  m.sum_abs = detail::combine_lanes(abs_l);
  m.sum_sq = detail::combine_lanes(sq_l);
  m.left_sum_sq = detail::combine_lanes(lsq_l);
  m.right_sum_sq = detail::combine_lanes(rsq_l);
  m.left_count = detail::combine_lanes(ln_l);
  m.right_count = detail::combine_lanes(rn_l);
  detail::moments_tail(v + n4, n - n4, m);
  return m;
}

SumSq sum_sq(const double* v, std::size_t n) {
  double s_l[4] = {}, q_l[4] = {};
  const std::size_t n4 = n - n % 4;
  for (std::size_t i = 0; i < n4; ++i) {
    const std::size_t j = i % 4;
    s_l[j] = s_l[j] + v[i];
    q_l[j] = q_l[j] + v[i] * v[i];
  }
  SumSq r{detail::combine_lanes(s_l), detail::combine_lanes(q_l)};
  for (std::size_t i = n4; i < n; ++i) {
    r.sum = r.sum + v[i];
    r.sum_sq = r.sum_sq + v[i] * v[i];
  }
  return r;
}

double squared_distance(const double* a, const double* b, std::size_t n) {
  double l[4] = {};
  const std::size_t n4 = n - n % 4;
  for (std::size_t i = 0; i < n4; ++i) {
    const double d = a[i] - b[i];
    l[i % 4] = l[i % 4] + d * d;
  }
  double acc = detail::combine_lanes(l);
  for (std::size_t i = n4; i < n; ++i) {
    const double d = a[i] - b[i];
    acc = acc + d * d;
  }
  return acc;
}

}  // namespace

const Kernels& detail::scalar_kernels() {
  static const Kernels k{
      Backend::kScalar, &blur_row,  &blur_column, &multiply, &subtract_scalar, &local_sigma,
      &normalize,       &box_halve, &moments,     &sum_sq,   &squared_distance,
  };
  return k;
}

}  // namespace xgc::simd
