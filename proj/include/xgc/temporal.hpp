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

// Non-uniform frame selection. Importance over normalized time t in [0,1]
// is linear, w(t) = 5 + (3x - 2) t, so that w(0) / w(1) = 5 / (3 + 3x):
// front-heavy (5/3) for x = 0, back-heavy (5/6) for x = 1 and uniform at
// x = 2/3.

#include <cstddef>
#include <span>
#include <vector>

namespace xgc {

enum class DensityOrientation {
  kFrontWeighted,  // w(0) = 5, w(1) = 3 + 3x
  kReversed,       // w(0) = 3 + 3x, w(1) = 5
};

double temporal_density(double t, double x,
                        DensityOrientation orientation = DensityOrientation::kFrontWeighted);

/// Integral of the density over [0, t].
double temporal_cdf(double t, double x,
                    DensityOrientation orientation = DensityOrientation::kFrontWeighted);

/// t such that temporal_cdf(t) / temporal_cdf(1) == u.
double density_cdf_inverse(double u, double x,
                           DensityOrientation orientation = DensityOrientation::kFrontWeighted);

struct SamplingPlan {
  std::vector<std::size_t> indices;  // strictly increasing
  std::size_t budget = 0;
  double x_used = 0.0;
};

/// Frame k of the budget sits at the inverse CDF of quantile (k - 0.5) / budget.
SamplingPlan sample_frames(std::size_t frame_count, std::size_t budget, double x,
                           DensityOrientation orientation = DensityOrientation::kFrontWeighted);

/// Same discretization under a flat density.
SamplingPlan sample_frames_uniform(std::size_t frame_count, std::size_t budget);

/// Integer frame counts maximizing sum_i w_i log(counts_i) subject to
/// sum counts == budget. Ties go to the lower index.
std::vector<std::size_t> allocate_frames(std::span<const double> weights, std::size_t budget);

}  // namespace xgc
