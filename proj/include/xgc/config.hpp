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

// INI configuration file mirroring the command-line flags.
//
//   [classifier] alpha h_m w_m key_frame_count epsilon_mean
//                pgc_ogc_threshold invert_quality uneven_cv_bound
//   [fragment]   grid_size patch_size seed
//   [temporal]   budget reverse_density
//   [ablation]   disable_spatial disable_temporal
//   [model]      path
//   [run]        jobs output seed
//   [evaluate]   repeats plcc_logistic higher_is_better
//   [calibrate]  segments stride
//
// Unknown sections or keys are rejected.

#include <filesystem>
#include <string>

#include "xgc/pipeline.hpp"

namespace xgc {

/// Applies the file's settings on top of `cfg`. Throws kConfig on syntax
/// errors, unknown keys or unparsable values.
void apply_config_file(const std::filesystem::path& path, PipelineConfig& cfg);
void apply_config_text(const std::string& text, PipelineConfig& cfg);

}  // namespace xgc
