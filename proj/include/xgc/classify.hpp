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

// Content-tier classification: a hardware term lambda separates
// hardware-limited (UGC) footage from the rest, and a quality term places
// the remainder between PGC and OGC. The confidence x in [0,1] drives the
// spatial crop and the temporal density.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "xgc/frame.hpp"
#include "xgc/quality.hpp"

namespace xgc {

struct ClassifierConfig {
  double alpha = 0.5;
  int h_m = 720;
  int w_m = 1280;
  int key_frame_count = 3;
  double epsilon_mean = 1e-6;
  double pgc_ogc_threshold = 0.75;
  /// Substitute 100 - q for the quality score q.
  bool invert_quality = false;
  /// Coefficient-of-variation bound for UGC footage: the evenness operand
  /// of lambda is (1 - std/mean) / (1 - bound). Zero gives the raw operand.
  double uneven_cv_bound = 0.5;

  /// Throws kConfig on an invalid field.
  void validate() const;
};

enum class ContentLabel { kUgc, kPgc, kOgc };
enum class Branch { kHardwareLimited, kQualityLimited };

struct Classification {
  double lambda = 0.0;
  double x = 0.0;
  ContentLabel label = ContentLabel::kUgc;
  Branch branch = Branch::kHardwareLimited;
  /// Mean quality score over the key frames; set on the quality branch only.
  std::optional<double> quality;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// 1 - std/mean over all samples (population std), floored at 0. Returns 0
/// when the mean is below epsilon_mean.
double unevenness_term(const LumaFrame& frame, double epsilon_mean);

/// sqrt(h w) / sqrt(h_m w_m), unclamped.
double resolution_term(int h, int w, int h_m, int w_m);

/// `count` indices evenly spaced over [0, frame_count - 1], both ends
/// included; a single frame or count == 1 gives {0}.
std::vector<std::size_t> key_frame_indices(std::size_t frame_count, int count);

double hardware_lambda(const Clip& clip, const ClassifierConfig& cfg);

/// Applies the two-branch confidence rule to a known lambda. `quality` is
/// required when lambda > 1.
Classification classify_lambda(double lambda, std::optional<double> quality,
                               const ClassifierConfig& cfg);

/// Full classification. The predictor is consulted only when lambda > 1;
/// passing nullptr in that case throws kModel.
Classification confidence(const Clip& clip, const ClassifierConfig& cfg,
                          const QualityPredictor* quality);

std::string to_string(ContentLabel label);
std::string to_string(Branch branch);
nlohmann::json to_json(const Classification& c);

}  // namespace xgc
