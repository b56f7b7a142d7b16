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

#include <doctest.h>

#include <nlohmann/json.hpp>

#include "test_support.hpp"
#include "xgc/error.hpp"
#include "xgc/fixtures.hpp"
#include "xgc/pipeline.hpp"

using namespace xgc;

namespace {

Clip noise_clip(int w, int h, std::size_t frames, std::uint64_t seed) {
  std::vector<LumaFrame> f;
  for (std::size_t i = 0; i < frames; ++i) f.push_back(testing::noise_frame(w, h, seed + i, 0.2, 0.7));
  return Clip::from_frames(std::move(f));
}

}  // namespace

TEST_CASE("pipeline ablation rows map to flags and names") {
  CHECK(flags_for(AblationRow::kNone) == AblationFlags{false, false});
  CHECK(flags_for(AblationRow::kAll) == AblationFlags{true, true});
  for (auto row : kAllAblationRows) {
    CHECK(row_for(flags_for(row)) == row);
    CHECK(parse_ablation_row(to_string(row)) == row);
  }
  CHECK(parse_ablation_row("spatial") == AblationRow::kSpatial);
  CHECK_FALSE(parse_ablation_row("bogus").has_value());
}

TEST_CASE("pipeline prepare applies crop and density") {
  const auto clip = noise_clip(320, 256, 40, 1);
  PipelineConfig cfg;
  const auto cls = classify_lambda(0.5, std::nullopt, cfg.classifier);
  const auto p = prepare_clip(clip, cls, cfg);
  CHECK(p.rect == central_crop_rect(256, 320, 0.25));
  CHECK(p.plan.indices == sample_frames(40, 10, 0.25).indices);
  REQUIRE(p.fragments.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    const auto direct = fragment_sample(apply_crop(clip.frame(p.plan.indices[i]), p.rect), cfg.fragment);
    CHECK(p.fragments[i].image == direct.image);
  }
}

TEST_CASE("pipeline ablation switches") {
  const auto clip = noise_clip(320, 256, 40, 2);
  PipelineConfig cfg;
  const auto cls = classify_lambda(0.2, std::nullopt, cfg.classifier);

  cfg.ablation = flags_for(AblationRow::kSpatial);
  auto p = prepare_clip(clip, cls, cfg);
  CHECK(p.rect == full_rect(256, 320));
  CHECK(p.fragments[0].image == fragment_sample(clip.frame(p.plan.indices[0]), cfg.fragment).image);
  CHECK(p.plan.indices == sample_frames(40, 10, 0.1).indices);

  cfg.ablation = flags_for(AblationRow::kTemporal);
  p = prepare_clip(clip, cls, cfg);
  CHECK(p.rect == central_crop_rect(256, 320, 0.1));
  CHECK(p.plan.indices == sample_frames_uniform(40, 10).indices);

  cfg.ablation = flags_for(AblationRow::kAll);
  p = prepare_clip(clip, cls, cfg);
  CHECK(p.rect == full_rect(256, 320));
  CHECK(p.plan.indices == sample_frames_uniform(40, 10).indices);
}

TEST_CASE("pipeline scoring is deterministic and independent of jobs") {
  const auto clip = noise_clip(300, 240, 25, 3);
  const BrisquePredictor predictor(fixtures::synthetic_rbf_model(2, 16));
  PipelineConfig cfg;
  const auto a = score_clip_pipeline(clip, cfg, predictor, "c");
  cfg.jobs = 4;
  const auto b = score_clip_pipeline(clip, cfg, predictor, "c");
  CHECK(a.score == b.score);
  CHECK(to_json(a, false).dump() == to_json(b, false).dump());

  double sum = 0.0;
  for (const auto& f : a.prepared.fragments) sum += predictor.score(f.image);
  CHECK(a.score == doctest::Approx(sum / 10.0).epsilon(1e-15));
}

TEST_CASE("pipeline score json fields") {
  const auto clip = noise_clip(240, 240, 5, 4);
  const BrisquePredictor predictor(fixtures::constant_model(12.5));
  const auto s = score_clip_pipeline(clip, PipelineConfig{}, predictor, "clip");
  CHECK(s.score == 12.5);
  const auto j = to_json(s);
  for (const char* key : {"clip_id", "x", "label", "classification", "crop", "plan", "score", "elapsed_ms"})
    CHECK(j.contains(key));
  CHECK(j.at("plan").at("indices").size() == 5);
  CHECK_FALSE(to_json(s, false).contains("elapsed_ms"));
}

TEST_CASE("pipeline config validation and digest") {
  PipelineConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  const auto d = cfg.digest();
  CHECK(d.size() == 16);
  PipelineConfig paths = cfg;
  paths.jobs = 8;
  paths.output_path = "/tmp/out.json";
  CHECK(paths.digest() == d);
  PipelineConfig changed = cfg;
  changed.temporal_budget = 11;
  CHECK(changed.digest() != d);

  cfg.temporal_budget = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
}
