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

// End-to-end scoring of one clip: classify, crop, fragment, sample frames
// and average the per-frame quality scores.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "xgc/classify.hpp"
#include "xgc/frame.hpp"
#include "xgc/quality.hpp"
#include "xgc/spatial.hpp"
#include "xgc/temporal.hpp"

namespace xgc {

struct AblationFlags {
  bool disable_spatial = false;   // identity crop, fragments from the full frame
  bool disable_temporal = false;  // uniform sampling at the same budget

  friend bool operator==(const AblationFlags&, const AblationFlags&) = default;
};

/// Rows of the module ablation table, named after the modules switched off.
enum class AblationRow { kNone, kSpatial, kTemporal, kAll };

AblationFlags flags_for(AblationRow row);
AblationRow row_for(const AblationFlags& flags);
std::string to_string(AblationRow row);
std::optional<AblationRow> parse_ablation_row(const std::string& text);
inline constexpr AblationRow kAllAblationRows[] = {AblationRow::kNone, AblationRow::kSpatial,
                                                   AblationRow::kTemporal, AblationRow::kAll};

struct PipelineConfig {
  ClassifierConfig classifier;
  FragmentConfig fragment;
  std::size_t temporal_budget = 10;
  DensityOrientation orientation = DensityOrientation::kFrontWeighted;
  AblationFlags ablation;
  std::optional<std::filesystem::path> model_path;
  std::optional<std::filesystem::path> output_path;
  int jobs = 1;

  // Benchmark protocol.
  std::size_t repeats = 10;
  std::uint64_t seed = 0;
  bool plcc_logistic = false;
  /// Model output already follows the MOS direction (higher = better).
  bool higher_is_better = false;

  // Calibration.
  std::size_t calibrate_segments = 10;
  std::size_t calibrate_stride = 5;

  /// Throws kConfig on an invalid field.
  void validate() const;
  /// Settings that influence results; excludes paths and thread count.
  nlohmann::json canonical_json() const;
  /// Hex FNV-1a of canonical_json().dump().
  std::string digest() const;
};

/// Frames ready for the quality model, plus the decisions that produced them.
struct PreparedClip {
  Classification classification;
  CropRect rect;
  SamplingPlan plan;
  std::vector<FragmentImage> fragments;  // one per planned frame
};

/// Crop, fragment and sample for a known classification.
PreparedClip prepare_clip(const Clip& clip, const Classification& classification,
                          const PipelineConfig& cfg);

struct ClipScore {
  std::string clip_id;
  PreparedClip prepared;
  double score = 0.0;
  double elapsed_ms = 0.0;
};

/// Full pipeline. `predictor` serves both the classifier's quality branch
/// and the per-fragment scores. Frames are scored on cfg.jobs threads.
ClipScore score_clip_pipeline(const Clip& clip, const PipelineConfig& cfg,
                              const QualityPredictor& predictor, std::string clip_id = {});

nlohmann::json to_json(const SamplingPlan& plan);
nlohmann::json to_json(const ClipScore& s, bool include_timing = true);

}  // namespace xgc
