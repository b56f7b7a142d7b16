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

#include <memory>
#include <vector>

#include "xgc/brisque.hpp"
#include "xgc/frame.hpp"
#include "xgc/temporal.hpp"

namespace xgc {

/// Frame-level no-reference quality model on the 0..100 distortion scale
/// (higher = worse). Implementations must allow concurrent const calls.
class QualityPredictor {
 public:
  virtual ~QualityPredictor() = default;
  virtual double score(const LumaFrame& frame) const = 0;
};

class BrisquePredictor final : public QualityPredictor {
 public:
  explicit BrisquePredictor(brisque::SvrModel model);

  double score(const LumaFrame& frame) const override;
  const brisque::SvrModel& model() const noexcept { return model_; }

 private:
  brisque::SvrModel model_;
};

/// Arithmetic mean of per-frame scores over the planned frames.
double score_clip(const Clip& clip, const SamplingPlan& plan, const QualityPredictor& predictor);
double score_clip(const Clip& clip, const SamplingPlan& plan, const brisque::SvrModel& model);

}  // namespace xgc
