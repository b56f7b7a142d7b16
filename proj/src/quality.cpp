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

#include "xgc/quality.hpp"

#include "xgc/error.hpp"

namespace xgc {

BrisquePredictor::BrisquePredictor(brisque::SvrModel model) : model_(std::move(model)) {
  model_.validate();
}

double BrisquePredictor::score(const LumaFrame& frame) const {
  return brisque::predict(brisque::features(frame), model_);
}

double score_clip(const Clip& clip, const SamplingPlan& plan, const QualityPredictor& predictor) {
  require(!plan.indices.empty(), ErrorKind::kInvalidArgument, "empty sampling plan");
  double sum = 0.0;
  for (auto i : plan.indices) {
    require(i < clip.frame_count(), ErrorKind::kInvalidArgument, "plan index outside clip");
    sum += predictor.score(clip.frame(i));
  }
  return sum / static_cast<double>(plan.indices.size());
}

double score_clip(const Clip& clip, const SamplingPlan& plan, const brisque::SvrModel& model) {
  return score_clip(clip, plan, BrisquePredictor(model));
}

}  // namespace xgc
