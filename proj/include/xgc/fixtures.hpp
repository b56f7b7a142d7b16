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

// Deterministic synthetic clips and models used by the tests, the
// acceptance suite and the `fixtures` command.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "xgc/brisque.hpp"
#include "xgc/frame.hpp"

namespace xgc::fixtures {

/// Frames computed on demand from their index.
class GeneratedSource final : public FrameSource {
 public:
  using Generator = std::function<LumaFrame(std::size_t)>;
  GeneratedSource(FrameFormat format, std::size_t count, Generator generate);

  FrameFormat format() const override { return format_; }
  std::size_t frame_count() const override { return count_; }
  LumaFrame frame(std::size_t index) const override;

 private:
  FrameFormat format_;
  std::size_t count_;
  Generator generate_;
};

/// 320x240 vignetted, noisy footage (hardware-limited) when !high_res,
/// otherwise flat 1920x1080 footage with mild noise.
Clip separation_clip(bool high_res, std::size_t index, std::uint64_t seed,
                     std::size_t frames = 3);

/// Moving gradient with noise; frames are synthesized on access.
Clip latency_clip(std::uint64_t seed, std::size_t frames = 150, int width = 1920,
                  int height = 1080);

struct QualityLayout {
  int side = 288;
  std::size_t frames = 30;
  std::size_t budget = 10;
  int border = 5;              // width of the distracting edge band
  double min_sigma = 0.005;    // noise range of the quality signal
  double max_sigma = 0.03;
  double border_min_density = 0.02;  // impulse density range of the band
  double border_max_density = 0.5;
};

struct QualityClip {
  std::string clip_id;
  Clip clip;
  double mos = 0.0;
};

/// Textured clips whose MOS is a decreasing function of one noise level.
/// That level is applied to the interior of the frames the front-weighted
/// sampler picks for a clip of this size; every other frame, and the edge
/// band, carries noise drawn independently of the MOS.
std::vector<QualityClip> quality_dataset(std::size_t n_clips, std::uint64_t seed,
                                         const QualityLayout& layout = {});

/// Writes quality_dataset as 8-bit monochrome Y4M files plus manifest.csv
/// into `dir`; returns the manifest path.
std::filesystem::path write_quality_dataset(const std::filesystem::path& dir, std::size_t n_clips,
                                            std::uint64_t seed, const QualityLayout& layout = {});

/// RBF model whose prediction is `score` for every input.
brisque::SvrModel constant_model(double score);

/// RBF model with random support vectors spanning the usual feature range.
brisque::SvrModel synthetic_rbf_model(std::uint64_t seed, std::size_t n_support = 64);

}  // namespace xgc::fixtures
