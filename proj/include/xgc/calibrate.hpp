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

// Estimation of per-segment importance weights from a scored dataset and
// the mapping between the first/last weight ratio and the confidence x.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "xgc/brisque.hpp"
#include "xgc/frame.hpp"
#include "xgc/quality.hpp"

namespace xgc {

/// Floor applied to per-segment rank correlations before normalization.
inline constexpr double kWeightFloor = 0.01;
inline constexpr std::size_t kDefaultSegmentStride = 5;
inline constexpr std::size_t kDefaultSegmentCount = 10;
inline constexpr std::size_t kMinCalibrationClips = 5;
inline constexpr std::size_t kMinRegressionSamples = 10;

struct SegmentSeries {
  std::string clip_id;
  std::size_t n_segments = 0;
  std::vector<double> scores;  // mean quality score per segment
};

struct WeightEstimate {
  std::vector<double> weights;  // positive, sums to 1
  double ratio_first_last = 1.0;
  double x_implied = 0.0;
  std::size_t n_segments = 0;
  std::size_t n_clips = 0;
};

/// [begin, end) frame ranges of `n` contiguous equal segments; the last
/// segment absorbs the remainder.
std::vector<std::pair<std::size_t, std::size_t>> segment_bounds(std::size_t frame_count,
                                                                std::size_t n);

/// Mean score per segment over every `stride`-th frame of the segment,
/// starting at its first frame.
SegmentSeries segment_scores(const Clip& clip, std::size_t n_segments,
                             const QualityPredictor& predictor,
                             std::size_t stride = kDefaultSegmentStride,
                             std::string clip_id = {});

/// w_i proportional to max(kWeightFloor, SRoCC(Q_i over clips, mos)).
WeightEstimate estimate_weights(std::span<const SegmentSeries> series, std::span<const double> mos);

/// clamp((5 / ratio - 3) / 3, 0, 1).
double x_from_ratio(double ratio_first_last);

/// 5 / (3 + 3x).
double ratio_from_x(double x);

/// Ridge regression on features scaled to [-1, 1]; returns a linear-kernel
/// model. Columns with zero range get a unit range.
brisque::SvrModel train_fallback_regressor(std::span<const brisque::BrisqueFeatures> features,
                                           std::span<const double> targets,
                                           double ridge = 1e-3);

nlohmann::json to_json(const WeightEstimate& w);

}  // namespace xgc
