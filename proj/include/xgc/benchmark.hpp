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

// Repeated random-split evaluation of the pipeline against subjective
// scores, with optional module ablations.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "xgc/brisque.hpp"
#include "xgc/media_io.hpp"
#include "xgc/pipeline.hpp"

namespace xgc {

inline constexpr std::size_t kMinBenchmarkEntries = 5;
inline constexpr double kTrainFraction = 0.8;

struct Metrics {
  double srocc = 0.0;
  double krocc = 0.0;
  double plcc = 0.0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

struct ClipRecord {
  std::string clip_id;
  double predicted = 0.0;
  double mos = 0.0;
  double ms = 0.0;
  std::size_t repeat = 0;
};

struct ClipFailure {
  std::string clip_id;
  std::string error;
};

struct EvaluationReport {
  std::string dataset;
  AblationRow ablation = AblationRow::kNone;
  std::string config_digest;
  std::size_t repeats = 0;
  std::uint64_t split_seed = 0;
  int jobs = 1;
  std::size_t n_clips = 0;
  std::vector<Metrics> per_repeat;
  Metrics mean;
  Metrics median;
  std::vector<std::string> timed_clip_ids;  // sorted by clip_id
  std::vector<double> per_clip_ms;          // pipeline time, decode excluded
  double mean_ms = 0.0;
  double median_ms = 0.0;
  double decode_ms_total = 0.0;
  std::vector<ClipFailure> failures;
  std::vector<ClipRecord> records;  // test-set predictions of every repeat
};

/// Returns a predicted MOS (higher = better) for an entry, bypassing the
/// pipeline, or nullopt to run it.
using ScoreOverride = std::function<std::optional<double>(const ManifestEntry&)>;

/// Scores every manifest entry under each ablation row and evaluates
/// `cfg.repeats` seeded 80/20 splits.
///
/// With a model, its output is the clip prediction. Without one, a ridge
/// regressor is fitted on the training clips of every split: one on full
/// key frames for the classifier, one on pipeline fragments for scoring,
/// both targeting the distortion 100 (max_mos - mos) / (max_mos - min_mos).
///
/// Entries of kind kScoresFile carry a precomputed predicted MOS. Decode
/// failures are reported per clip and the clip is dropped.
std::vector<EvaluationReport> run_benchmark(const DatasetManifest& manifest,
                                            const PipelineConfig& cfg,
                                            const std::optional<brisque::SvrModel>& model,
                                            std::span<const AblationRow> rows,
                                            const ScoreOverride& override_score = {});

/// Single-row convenience wrapper using cfg.ablation.
EvaluationReport run_benchmark(const DatasetManifest& manifest, const PipelineConfig& cfg,
                               const std::optional<brisque::SvrModel>& model);

nlohmann::json to_json(const Metrics& m);
nlohmann::json to_json(const EvaluationReport& r, bool include_timing = true);

/// Header clip_id,predicted,mos,ms,ablation,repeat; ms is blank when timing
/// is omitted.
std::string to_csv(std::span<const EvaluationReport> reports, bool include_timing = true);

/// Median of each metric's mean across datasets, for reports sharing a row.
Metrics median_over_datasets(std::span<const EvaluationReport> reports);

}  // namespace xgc
