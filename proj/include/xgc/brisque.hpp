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

// Natural-scene-statistics features (BRISQUE) and their regression to a
// 0-100 distortion score (higher = more distorted).
//
// Feature layout, per scale s in {0 (full), 1 (half)}, base = 18 * s:
//   base + 0       GGD shape of the MSCN field
//   base + 1       GGD variance of the MSCN field
//   base + 2 + 4o  AGGD shape          of orientation o
//   base + 3 + 4o  AGGD mean           of orientation o
//   base + 4 + 4o  AGGD left variance  of orientation o
//   base + 5 + 4o  AGGD right variance of orientation o
// with o = 0 horizontal, 1 vertical, 2 main diagonal, 3 anti-diagonal.

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "xgc/frame.hpp"
#include "xgc/simd/kernels.hpp"

namespace xgc::brisque {

inline constexpr std::size_t kFeatureCount = 36;
inline constexpr double kGaussianSigma = 7.0 / 6.0;
/// Stabilizer of the MSCN denominator; C = 1 on the 0..255 scale.
inline constexpr double kMscnC = 1.0 / 255.0;
inline constexpr double kShapeGridMin = 0.2;
inline constexpr double kShapeGridMax = 10.0;
inline constexpr double kShapeGridStep = 0.001;

/// Real-valued grid in row-major order.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  Plane() = default;
  Plane(int w, int h) : width(w), height(h), values(static_cast<std::size_t>(w) * h, 0.0) {}

  static Plane from_frame(const LumaFrame& frame);

  double at(int r, int c) const { return values[static_cast<std::size_t>(r) * width + c]; }
  double& at(int r, int c) { return values[static_cast<std::size_t>(r) * width + c]; }
  const double* row(int r) const { return values.data() + static_cast<std::size_t>(r) * width; }
  double* row(int r) { return values.data() + static_cast<std::size_t>(r) * width; }
};

using MscnField = Plane;

/// Normalized 1-D taps of the 7x7 separable Gaussian window.
const std::array<double, simd::kBlurTaps>& gaussian_taps();

/// Separable Gaussian filtering with reflect-101 borders.
Plane gaussian_blur(const Plane& in, const simd::Kernels& k = simd::active());

struct LocalStats {
  Plane mu;
  Plane sigma;
};

/// Gaussian-weighted local mean and deviation. The image is shifted by its
/// first sample before filtering, so constant inputs give exactly mu = c and
/// sigma = 0.
LocalStats local_stats(const Plane& image, const simd::Kernels& k = simd::active());
LocalStats local_stats(const LumaFrame& frame);

MscnField mscn(const Plane& image, const simd::Kernels& k = simd::active());
MscnField mscn(const LumaFrame& frame);

struct PairwiseProducts {
  Plane horizontal;     // m(i,j) m(i,j+1)
  Plane vertical;       // m(i,j) m(i+1,j)
  Plane main_diagonal;  // m(i,j) m(i+1,j+1)
  Plane anti_diagonal;  // m(i,j) m(i+1,j-1)
};

PairwiseProducts pairwise_products(const MscnField& m, const simd::Kernels& k = simd::active());

struct GgdParams {
  double shape = 0.0;
  double variance = 0.0;
};

struct AggdParams {
  double shape = 0.0;
  double mean = 0.0;
  double left_variance = 0.0;
  double right_variance = 0.0;
};

/// Moment-matching fit over the shape grid [0.2, 10] step 0.001. All-zero
/// input yields {10, 0}.
GgdParams ggd_fit(std::span<const double> samples, const simd::Kernels& k = simd::active());

/// Asymmetric fit; an empty side has variance 0. All-zero input yields
/// {10, 0, 0, 0}.
AggdParams aggd_fit(std::span<const double> samples, const simd::Kernels& k = simd::active());

/// Shape estimate from the generalized moment ratio (E|X|)^2 / E[X^2].
double shape_from_ratio(double ratio);

/// Gamma(2/s)^2 / (Gamma(1/s) Gamma(3/s)).
double generalized_ratio(double shape);

/// 2x2 box average; an odd trailing row or column is dropped.
Plane box_downsample(const Plane& in, const simd::Kernels& k = simd::active());

struct BrisqueFeatures {
  std::array<double, kFeatureCount> values{};
};

/// Requires at least 14x14 so that the half scale still fits the window.
BrisqueFeatures features(const LumaFrame& frame, const simd::Kernels& k = simd::active());
BrisqueFeatures features(const Plane& image, const simd::Kernels& k = simd::active());

/// Features of a constant frame.
BrisqueFeatures constant_frame_features();

// ---------------------------------------------------------------------------
// Regression

enum class KernelKind { kRbf, kLinear };

/// Regressor from scaled features to a score. RBF models carry support
/// vectors and dual coefficients; linear models carry weights and a bias.
/// Both scale features to [-1, 1] with feature_min / feature_max first.
struct SvrModel {
  KernelKind kernel = KernelKind::kRbf;
  double gamma = 0.0;
  double rho = 0.0;
  std::array<double, kFeatureCount> feature_min{};
  std::array<double, kFeatureCount> feature_max{};
  std::vector<std::array<double, kFeatureCount>> support_vectors;
  std::vector<double> dual_coefs;
  std::array<double, kFeatureCount> weights{};
  double bias = 0.0;

  /// Throws kModel on any broken invariant.
  void validate() const;
};

std::array<double, kFeatureCount> scale_features(const BrisqueFeatures& f, const SvrModel& model);

/// Unclamped regression output.
double predict_raw(const BrisqueFeatures& f, const SvrModel& model,
                   const simd::Kernels& k = simd::active());

/// Regression output clamped to [0, 100].
double predict(const BrisqueFeatures& f, const SvrModel& model,
               const simd::Kernels& k = simd::active());

SvrModel load_model(const std::filesystem::path& path);
void save_model(const std::filesystem::path& path, const SvrModel& model);

}  // namespace xgc::brisque
