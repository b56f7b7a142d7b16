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

#include "xgc/calibrate.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "xgc/error.hpp"
#include "xgc/stats.hpp"

namespace xgc {

std::vector<std::pair<std::size_t, std::size_t>> segment_bounds(std::size_t frame_count,
                                                                std::size_t n) {
  require(n >= 1, ErrorKind::kInvalidArgument, "segment count must be positive");
  require(frame_count >= n, ErrorKind::kInvalidArgument,
          "too few frames: " + std::to_string(frame_count) + " frames for " + std::to_string(n) +
              " segments");
  const std::size_t size = frame_count / n;
  std::vector<std::pair<std::size_t, std::size_t>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = {i * size, i + 1 == n ? frame_count : (i + 1) * size};
  }
  return out;
}

SegmentSeries segment_scores(const Clip& clip, std::size_t n_segments,
                             const QualityPredictor& predictor, std::size_t stride,
                             std::string clip_id) {
  require(n_segments >= 2, ErrorKind::kInvalidArgument, "need at least two segments");
  require(stride >= 1, ErrorKind::kInvalidArgument, "segment stride must be positive");
  SegmentSeries s{std::move(clip_id), n_segments, {}};
  for (const auto& [begin, end] : segment_bounds(clip.frame_count(), n_segments)) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t f = begin; f < end; f += stride) {
      sum += predictor.score(clip.frame(f));
      ++count;
    }
    s.scores.push_back(sum / static_cast<double>(count));
  }
  return s;
}

WeightEstimate estimate_weights(std::span<const SegmentSeries> series, std::span<const double> mos) {
  require(series.size() == mos.size(), ErrorKind::kInvalidArgument,
          "series and mos differ in length");
  require(series.size() >= kMinCalibrationClips, ErrorKind::kInvalidArgument,
          "calibration needs at least " + std::to_string(kMinCalibrationClips) + " clips");
  const std::size_t n = series.front().n_segments;
  require(n >= 2, ErrorKind::kInvalidArgument, "need at least two segments");
  for (const auto& s : series) {
    require(s.n_segments == n && s.scores.size() == n, ErrorKind::kInvalidArgument,
            "mismatched n_segments across clips");
  }

  WeightEstimate est;
  est.n_segments = n;
  est.n_clips = series.size();
  std::vector<double> column(series.size());
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < series.size(); ++c) column[c] = series[c].scores[i];
    const double s = stats::srocc(column, mos).value;
    est.weights.push_back(std::max(kWeightFloor, s));
    total += est.weights.back();
  }
  for (double& w : est.weights) w /= total;
  est.ratio_first_last = est.weights.front() / est.weights.back();
  est.x_implied = x_from_ratio(est.ratio_first_last);
  return est;
}

double x_from_ratio(double ratio_first_last) {
  require(std::isfinite(ratio_first_last) && ratio_first_last > 0.0,
          ErrorKind::kInvalidArgument, "weight ratio must be positive");
  return std::clamp((5.0 / ratio_first_last - 3.0) / 3.0, 0.0, 1.0);
}

double ratio_from_x(double x) { return 5.0 / (3.0 + 3.0 * x); }

brisque::SvrModel train_fallback_regressor(std::span<const brisque::BrisqueFeatures> features,
                                           std::span<const double> targets, double ridge) {
  using brisque::kFeatureCount;
  require(features.size() == targets.size(), ErrorKind::kInvalidArgument,
          "features and targets differ in length");
  require(features.size() >= kMinRegressionSamples, ErrorKind::kInvalidArgument,
          "regression needs at least " + std::to_string(kMinRegressionSamples) + " samples");
  require(std::isfinite(ridge) && ridge > 0.0, ErrorKind::kInvalidArgument,
          "ridge strength must be positive");

  brisque::SvrModel model;
  model.kernel = brisque::KernelKind::kLinear;
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    double lo = features.front().values[j];
    double hi = lo;
    for (const auto& f : features) {
      lo = std::min(lo, f.values[j]);
      hi = std::max(hi, f.values[j]);
    }
    model.feature_min[j] = lo;
    model.feature_max[j] = hi > lo ? hi : lo + 1.0;
  }

  const auto rows = static_cast<Eigen::Index>(features.size());
  const auto cols = static_cast<Eigen::Index>(kFeatureCount);
  Eigen::MatrixXd x(rows, cols);
  Eigen::VectorXd y(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto s = brisque::scale_features(features[static_cast<std::size_t>(r)], model);
    for (Eigen::Index c = 0; c < cols; ++c) x(r, c) = s[static_cast<std::size_t>(c)];
    y(r) = targets[static_cast<std::size_t>(r)];
  }
  const Eigen::RowVectorXd x_mean = x.colwise().mean();
  const double y_mean = y.mean();
  x.rowwise() -= x_mean;
  y.array() -= y_mean;

  Eigen::MatrixXd gram = x.transpose() * x;
  gram.diagonal().array() += ridge;
  const Eigen::VectorXd w = gram.ldlt().solve(x.transpose() * y);
  for (std::size_t j = 0; j < kFeatureCount; ++j) model.weights[j] = w(static_cast<Eigen::Index>(j));
  model.bias = y_mean - x_mean.dot(w);
  model.validate();
  return model;
}

nlohmann::json to_json(const WeightEstimate& w) {
  return {{"weights", w.weights},
          {"ratio_first_last", w.ratio_first_last},
          {"x_implied", w.x_implied},
          {"n_segments", w.n_segments},
          {"n_clips", w.n_clips}};
}

}  // namespace xgc
