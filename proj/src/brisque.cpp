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

#include "xgc/brisque.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xgc/error.hpp"

namespace xgc::brisque {

namespace {

constexpr int kGridSize = 9801;  // 0.2 .. 10.0 inclusive at 0.001

double grid_shape(int k) { return (200.0 + k) / 1000.0; }

struct ShapeTable {
  std::vector<double> ratio;

  ShapeTable() : ratio(kGridSize) {
    for (int k = 0; k < kGridSize; ++k) ratio[k] = generalized_ratio(grid_shape(k));
  }
};

const ShapeTable& shape_table() {
  static const ShapeTable table;
  return table;
}

void require_window(int width, int height, int minimum) {
  require(width >= minimum && height >= minimum, ErrorKind::kInvalidArgument,
          "frame too small for the " + std::to_string(minimum) + "x" + std::to_string(minimum) +
              " NSS window");
}

}  // namespace

Plane Plane::from_frame(const LumaFrame& frame) {
  Plane p;
  p.width = frame.width();
  p.height = frame.height();
  p.values.assign(frame.samples().begin(), frame.samples().end());
  return p;
}

const std::array<double, simd::kBlurTaps>& gaussian_taps() {
  static const std::array<double, simd::kBlurTaps> taps = [] {
    std::array<double, simd::kBlurTaps> t{};
    double sum = 0.0;
    for (int k = 0; k < simd::kBlurTaps; ++k) {
      const double d = k - simd::kBlurRadius;
      t[k] = std::exp(-(d * d) / (2.0 * kGaussianSigma * kGaussianSigma));
      sum += t[k];
    }
    for (auto& v : t) v /= sum;
    return t;
  }();
  return taps;
}

Plane gaussian_blur(const Plane& in, const simd::Kernels& k) {
  require(in.width >= 4 && in.height >= 4, ErrorKind::kInvalidArgument,
          "Gaussian window needs at least 4x4 input");
  const auto& taps = gaussian_taps();
  const auto w = static_cast<std::size_t>(in.width);
  Plane horizontal(in.width, in.height);
  for (int r = 0; r < in.height; ++r) k.blur_row(in.row(r), horizontal.row(r), w, taps.data());

  Plane out(in.width, in.height);
  const double* rows[simd::kBlurTaps];
  for (int r = 0; r < in.height; ++r) {
    for (int t = 0; t < simd::kBlurTaps; ++t) {
      const int src = r + t - simd::kBlurRadius;
      const int reflected = src < 0 ? -src : (src >= in.height ? 2 * (in.height - 1) - src : src);
      rows[t] = horizontal.row(reflected);
    }
    k.blur_column(rows, out.row(r), w, taps.data());
  }
  return out;
}

namespace {

struct CenteredStats {
  double offset;
  Plane centered;
  Plane mu_centered;
  Plane sigma;
};

CenteredStats centered_stats(const Plane& image, const simd::Kernels& k) {
  require_window(image.width, image.height, simd::kBlurTaps);
  const auto n = image.values.size();
  CenteredStats s{image.values.front(), Plane(image.width, image.height), {}, {}};
  k.subtract_scalar(image.values.data(), s.offset, s.centered.values.data(), n);
  Plane squared(image.width, image.height);
  k.multiply(s.centered.values.data(), s.centered.values.data(), squared.values.data(), n);
  s.mu_centered = gaussian_blur(s.centered, k);
  const Plane second = gaussian_blur(squared, k);
  s.sigma = Plane(image.width, image.height);
  k.local_sigma(s.mu_centered.values.data(), second.values.data(), s.sigma.values.data(), n);
  return s;
}

}  // namespace

LocalStats local_stats(const Plane& image, const simd::Kernels& k) {
  auto s = centered_stats(image, k);
  Plane mu(image.width, image.height);
  k.subtract_scalar(s.mu_centered.values.data(), -s.offset, mu.values.data(), mu.values.size());
  return {std::move(mu), std::move(s.sigma)};
}

LocalStats local_stats(const LumaFrame& frame) { return local_stats(Plane::from_frame(frame)); }

MscnField mscn(const Plane& image, const simd::Kernels& k) {
  const auto s = centered_stats(image, k);
  MscnField out(image.width, image.height);
  k.normalize(s.centered.values.data(), s.mu_centered.values.data(), s.sigma.values.data(), kMscnC,
              out.values.data(), out.values.size());
  return out;
}

MscnField mscn(const LumaFrame& frame) { return mscn(Plane::from_frame(frame)); }

PairwiseProducts pairwise_products(const MscnField& m, const simd::Kernels& k) {
  require(m.width >= 2 && m.height >= 2, ErrorKind::kInvalidArgument,
          "pairwise products need at least a 2x2 field");
  const int w = m.width;
  const int h = m.height;
  PairwiseProducts p{Plane(w - 1, h), Plane(w, h - 1), Plane(w - 1, h - 1), Plane(w - 1, h - 1)};
  const auto wn = static_cast<std::size_t>(w);
  for (int r = 0; r < h; ++r) k.multiply(m.row(r), m.row(r) + 1, p.horizontal.row(r), wn - 1);
  for (int r = 0; r + 1 < h; ++r) {
    k.multiply(m.row(r), m.row(r + 1), p.vertical.row(r), wn);
    k.multiply(m.row(r), m.row(r + 1) + 1, p.main_diagonal.row(r), wn - 1);
    k.multiply(m.row(r) + 1, m.row(r + 1), p.anti_diagonal.row(r), wn - 1);
  }
  return p;
}

double generalized_ratio(double shape) {
  return std::exp(2.0 * std::lgamma(2.0 / shape) - std::lgamma(1.0 / shape) -
                  std::lgamma(3.0 / shape));
}

double shape_from_ratio(double ratio) {
  // The ratio is increasing in the shape, so the nearest grid entry is one
  // of the two neighbours of the insertion point.
  const auto& table = shape_table().ratio;
  const auto it = std::lower_bound(table.begin(), table.end(), ratio);
  auto best = static_cast<int>(it - table.begin());
  if (best == kGridSize) return grid_shape(kGridSize - 1);
  if (best > 0 && std::fabs(ratio - table[best - 1]) <= std::fabs(ratio - table[best])) --best;
  return grid_shape(best);
}

GgdParams ggd_fit(std::span<const double> samples, const simd::Kernels& k) {
  require(samples.size() >= 2, ErrorKind::kInvalidArgument, "GGD fit needs at least 2 samples");
  const auto m = k.moments(samples.data(), samples.size());
  if (m.sum_sq == 0.0) return {kShapeGridMax, 0.0};
  const double n = static_cast<double>(samples.size());
  const double mean_abs = m.sum_abs / n;
  const double mean_sq = m.sum_sq / n;
  return {shape_from_ratio(mean_abs * mean_abs / mean_sq), mean_sq};
}

AggdParams aggd_fit(std::span<const double> samples, const simd::Kernels& k) {
  require(samples.size() >= 2, ErrorKind::kInvalidArgument, "AGGD fit needs at least 2 samples");
  const auto m = k.moments(samples.data(), samples.size());
  if (m.sum_sq == 0.0) return {kShapeGridMax, 0.0, 0.0, 0.0};
  const double n = static_cast<double>(samples.size());
  const double left_var = m.left_count > 0.0 ? m.left_sum_sq / m.left_count : 0.0;
  const double right_var = m.right_count > 0.0 ? m.right_sum_sq / m.right_count : 0.0;
  const double left_std = std::sqrt(left_var);
  const double right_std = std::sqrt(right_var);

  // (g^3 + 1)(g + 1) / (g^2 + 1)^2 tends to 1 as g -> 0 or g -> inf.
  double correction = 1.0;
  if (left_std > 0.0 && right_std > 0.0) {
    const double g = left_std / right_std;
    correction = (g * g * g + 1.0) * (g + 1.0) / ((g * g + 1.0) * (g * g + 1.0));
  }
  const double mean_abs = m.sum_abs / n;
  const double r_hat = mean_abs * mean_abs / (m.sum_sq / n);
  const double shape = shape_from_ratio(r_hat * correction);

  const double scale = std::sqrt(std::exp(std::lgamma(1.0 / shape) - std::lgamma(3.0 / shape)));
  const double mean = (right_std - left_std) * scale *
                      std::exp(std::lgamma(2.0 / shape) - std::lgamma(1.0 / shape));
  return {shape, mean, left_var, right_var};
}

Plane box_downsample(const Plane& in, const simd::Kernels& k) {
  Plane out(in.width / 2, in.height / 2);
  for (int r = 0; r < out.height; ++r) {
    k.box_halve(in.row(2 * r), in.row(2 * r + 1), out.row(r), static_cast<std::size_t>(out.width));
  }
  return out;
}

BrisqueFeatures features(const LumaFrame& frame, const simd::Kernels& k) {
  return features(Plane::from_frame(frame), k);
}

BrisqueFeatures features(const Plane& image, const simd::Kernels& k) {
  require_window(image.width, image.height, 2 * simd::kBlurTaps);
  BrisqueFeatures out;
  Plane current = image;
  for (int scale = 0; scale < 2; ++scale) {
    const std::size_t base = 18 * static_cast<std::size_t>(scale);
    const auto field = mscn(current, k);
    const auto g = ggd_fit(field.values, k);
    out.values[base + 0] = g.shape;
    out.values[base + 1] = g.variance;
    const auto products = pairwise_products(field, k);
    const Plane* orientations[4] = {&products.horizontal, &products.vertical,
                                    &products.main_diagonal, &products.anti_diagonal};
    for (std::size_t o = 0; o < 4; ++o) {
      const auto a = aggd_fit(orientations[o]->values, k);
      out.values[base + 2 + 4 * o] = a.shape;
      out.values[base + 3 + 4 * o] = a.mean;
      out.values[base + 4 + 4 * o] = a.left_variance;
      out.values[base + 5 + 4 * o] = a.right_variance;
    }
    if (scale == 0) current = box_downsample(current, k);
  }
  return out;
}

BrisqueFeatures constant_frame_features() {
  BrisqueFeatures f;
  for (std::size_t scale = 0; scale < 2; ++scale) {
    const std::size_t base = 18 * scale;
    f.values[base] = kShapeGridMax;
    for (std::size_t o = 0; o < 4; ++o) f.values[base + 2 + 4 * o] = kShapeGridMax;
  }
  return f;
}

}  // namespace xgc::brisque
