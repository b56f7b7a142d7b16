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

#include "xgc/classify.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "xgc/error.hpp"
#include "xgc/simd/kernels.hpp"

namespace xgc {

void ClassifierConfig::validate() const {
  require(alpha > 0.0 && alpha < 1.0, ErrorKind::kConfig, "alpha must lie in (0,1)");
  require(h_m >= 1 && w_m >= 1, ErrorKind::kConfig, "h_m and w_m must be positive");
  require(key_frame_count >= 1, ErrorKind::kConfig, "key_frame_count must be at least 1");
  require(epsilon_mean > 0.0, ErrorKind::kConfig, "epsilon_mean must be positive");
  require(pgc_ogc_threshold > alpha && pgc_ogc_threshold <= 1.0, ErrorKind::kConfig,
          "pgc_ogc_threshold must lie in (alpha, 1]");
  require(uneven_cv_bound >= 0.0 && uneven_cv_bound < 1.0, ErrorKind::kConfig,
          "uneven_cv_bound must lie in [0,1)");
}

double unevenness_term(const LumaFrame& frame, double epsilon_mean) {
  const auto& k = simd::active();
  const auto s = frame.samples();
  // Shifting by the first sample keeps constant frames exact.
  const double origin = s.front();
  std::vector<double> shifted(s.size());
  k.subtract_scalar(s.data(), origin, shifted.data(), s.size());
  const auto sums = k.sum_sq(shifted.data(), shifted.size());
  const double n = static_cast<double>(s.size());
  const double shift_mean = sums.sum / n;
  const double mean = origin + shift_mean;
  if (mean < epsilon_mean) return 0.0;
  const double var = std::max(0.0, sums.sum_sq / n - shift_mean * shift_mean);
  return std::max(0.0, 1.0 - std::sqrt(var) / mean);
}

double resolution_term(int h, int w, int h_m, int w_m) {
  require(h > 0 && w > 0 && h_m > 0 && w_m > 0, ErrorKind::kInvalidArgument,
          "resolution term needs positive dimensions");
  return std::sqrt(static_cast<double>(h) * w) / std::sqrt(static_cast<double>(h_m) * w_m);
}

std::vector<std::size_t> key_frame_indices(std::size_t frame_count, int count) {
  require(frame_count >= 1 && count >= 1, ErrorKind::kInvalidArgument,
          "key frames need a non-empty clip and a positive count");
  if (frame_count == 1 || count == 1) return {0};
  std::vector<std::size_t> out;
  const double last = static_cast<double>(frame_count - 1);
  for (int i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(std::llround(last * i / (count - 1)));
    if (out.empty() || out.back() != idx) out.push_back(idx);
  }
  return out;
}

double hardware_lambda(const Clip& clip, const ClassifierConfig& cfg) {
  const auto keys = key_frame_indices(clip.frame_count(), cfg.key_frame_count);
  double sum = 0.0;
  for (auto i : keys) sum += unevenness_term(clip.frame(i), cfg.epsilon_mean);
  const double evenness = sum / static_cast<double>(keys.size()) / (1.0 - cfg.uneven_cv_bound);
  return std::min(evenness, resolution_term(clip.height(), clip.width(), cfg.h_m, cfg.w_m));
}

Classification classify_lambda(double lambda, std::optional<double> quality,
                               const ClassifierConfig& cfg) {
  Classification c;
  c.lambda = lambda;
  if (lambda <= 1.0) {
    c.branch = Branch::kHardwareLimited;
    c.x = std::clamp(cfg.alpha * lambda, 0.0, cfg.alpha);
    c.label = ContentLabel::kUgc;
    return c;
  }
  require(quality.has_value(), ErrorKind::kModel,
          "a quality model is required for clips with lambda > 1");
  double q = std::clamp(*quality, 0.0, 100.0);
  if (cfg.invert_quality) q = 100.0 - q;
  c.branch = Branch::kQualityLimited;
  c.quality = *quality;
  c.x = std::clamp(cfg.alpha + (1.0 - cfg.alpha) * q / 100.0, cfg.alpha, 1.0);
  c.label = c.x < cfg.pgc_ogc_threshold ? ContentLabel::kPgc : ContentLabel::kOgc;
  return c;
}

Classification confidence(const Clip& clip, const ClassifierConfig& cfg,
                          const QualityPredictor* quality) {
  const double lambda = hardware_lambda(clip, cfg);
  std::optional<double> q;
  if (lambda > 1.0) {
    require(quality != nullptr, ErrorKind::kModel,
            "a quality model is required for clips with lambda > 1");
    const auto keys = key_frame_indices(clip.frame_count(), cfg.key_frame_count);
    double sum = 0.0;
    for (auto i : keys) sum += quality->score(clip.frame(i));
    q = sum / static_cast<double>(keys.size());
  }
  return classify_lambda(lambda, q, cfg);
}

std::string to_string(ContentLabel label) {
  switch (label) {
    case ContentLabel::kUgc: return "UGC";
    case ContentLabel::kPgc: return "PGC";
    case ContentLabel::kOgc: return "OGC";
  }
  return "unknown";
}

std::string to_string(Branch branch) {
  return branch == Branch::kHardwareLimited ? "hardware_limited" : "quality_limited";
}

nlohmann::json to_json(const Classification& c) {
  nlohmann::json j;
  j["lambda"] = c.lambda;
  j["x"] = c.x;
  j["label"] = to_string(c.label);
  j["branch"] = to_string(c.branch);
  if (c.quality) j["quality"] = *c.quality;
  return j;
}

}  // namespace xgc
