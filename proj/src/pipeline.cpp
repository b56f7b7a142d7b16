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

#include "xgc/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "xgc/error.hpp"
#include "xgc/util.hpp"

namespace xgc {

AblationFlags flags_for(AblationRow row) {
  switch (row) {
    case AblationRow::kNone: return {false, false};
    case AblationRow::kSpatial: return {true, false};
    case AblationRow::kTemporal: return {false, true};
    case AblationRow::kAll: return {true, true};
  }
  return {};
}

AblationRow row_for(const AblationFlags& flags) {
  if (flags.disable_spatial) return flags.disable_temporal ? AblationRow::kAll : AblationRow::kSpatial;
  return flags.disable_temporal ? AblationRow::kTemporal : AblationRow::kNone;
}

std::string to_string(AblationRow row) {
  switch (row) {
    case AblationRow::kNone: return "None";
    case AblationRow::kSpatial: return "Spatial";
    case AblationRow::kTemporal: return "Temporal";
    case AblationRow::kAll: return "All";
  }
  return "unknown";
}

std::optional<AblationRow> parse_ablation_row(const std::string& text) {
  for (auto row : kAllAblationRows) {
    auto name = to_string(row);
    if (text.size() == name.size() &&
        std::equal(text.begin(), text.end(), name.begin(),
                   [](char a, char b) { return std::tolower(a) == std::tolower(b); })) {
      return row;
    }
  }
  return std::nullopt;
}

void PipelineConfig::validate() const {
  classifier.validate();
  fragment.validate();
  require(temporal_budget >= 1, ErrorKind::kConfig, "temporal budget must be at least 1");
  require(jobs >= 1, ErrorKind::kConfig, "jobs must be at least 1");
  require(repeats >= 1, ErrorKind::kConfig, "repeats must be at least 1");
  require(calibrate_segments >= 2, ErrorKind::kConfig, "calibration needs at least 2 segments");
  require(calibrate_stride >= 1, ErrorKind::kConfig, "calibration stride must be at least 1");
}

nlohmann::json PipelineConfig::canonical_json() const {
  const auto& c = classifier;
  return {
      {"classifier",
       {{"alpha", c.alpha},
        {"h_m", c.h_m},
        {"w_m", c.w_m},
        {"key_frame_count", c.key_frame_count},
        {"epsilon_mean", c.epsilon_mean},
        {"pgc_ogc_threshold", c.pgc_ogc_threshold},
        {"invert_quality", c.invert_quality},
        {"uneven_cv_bound", c.uneven_cv_bound}}},
      {"fragment",
       {{"grid_size", fragment.grid_size},
        {"patch_size", fragment.patch_size},
        {"seed", fragment.seed}}},
      {"temporal",
       {{"budget", temporal_budget},
        {"reverse_density", orientation == DensityOrientation::kReversed}}},
      {"ablation",
       {{"disable_spatial", ablation.disable_spatial},
        {"disable_temporal", ablation.disable_temporal}}},
      {"evaluate",
       {{"repeats", repeats},
        {"seed", seed},
        {"plcc_logistic", plcc_logistic},
        {"higher_is_better", higher_is_better}}},
      {"calibrate", {{"segments", calibrate_segments}, {"stride", calibrate_stride}}},
  };
}

std::string PipelineConfig::digest() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical_json().dump())));
  return buf;
}

PreparedClip prepare_clip(const Clip& clip, const Classification& classification,
                          const PipelineConfig& cfg) {
  PreparedClip p;
  p.classification = classification;
  const double x = classification.x;
  p.rect = cfg.ablation.disable_spatial ? full_rect(clip.height(), clip.width())
                                        : central_crop_rect(clip.height(), clip.width(), x);
  p.plan = cfg.ablation.disable_temporal
               ? sample_frames_uniform(clip.frame_count(), cfg.temporal_budget)
               : sample_frames(clip.frame_count(), cfg.temporal_budget, x, cfg.orientation);
  p.plan.x_used = x;
  p.fragments.resize(p.plan.indices.size());
  parallel_for(p.plan.indices.size(), cfg.jobs, [&](std::size_t i) {
    const auto frame = clip.frame(p.plan.indices[i]);
    p.fragments[i] = cfg.ablation.disable_spatial
                         ? fragment_sample(frame, cfg.fragment)
                         : fragment_sample(apply_crop(frame, p.rect), cfg.fragment);
  });
  return p;
}

ClipScore score_clip_pipeline(const Clip& clip, const PipelineConfig& cfg,
                              const QualityPredictor& predictor, std::string clip_id) {
  Stopwatch watch;
  ClipScore s;
  s.clip_id = std::move(clip_id);
  const auto classification = confidence(clip, cfg.classifier, &predictor);
  s.prepared = prepare_clip(clip, classification, cfg);
  std::vector<double> scores(s.prepared.fragments.size());
  parallel_for(scores.size(), cfg.jobs,
               [&](std::size_t i) { scores[i] = predictor.score(s.prepared.fragments[i].image); });
  double sum = 0.0;
  for (double v : scores) sum += v;
  s.score = sum / static_cast<double>(scores.size());
  s.elapsed_ms = watch.elapsed_ms();
  return s;
}

nlohmann::json to_json(const SamplingPlan& plan) {
  return {{"x", plan.x_used}, {"budget", plan.budget}, {"indices", plan.indices}};
}

nlohmann::json to_json(const ClipScore& s, bool include_timing) {
  nlohmann::json j;
  j["clip_id"] = s.clip_id;
  j["x"] = s.prepared.classification.x;
  j["label"] = to_string(s.prepared.classification.label);
  j["classification"] = to_json(s.prepared.classification);
  j["crop"] = to_json(s.prepared.rect);
  j["plan"] = to_json(s.prepared.plan);
  j["score"] = s.score;
  if (include_timing) j["elapsed_ms"] = s.elapsed_ms;
  return j;
}

}  // namespace xgc
