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

#include "xgc/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xgc/error.hpp"

namespace xgc {

namespace {

void check_x(double x) {
  require(std::isfinite(x) && x >= 0.0 && x <= 1.0, ErrorKind::kInvalidArgument,
          "confidence x must lie in [0,1]");
}

double slope(double x) { return 3.0 * x - 2.0; }

double front_cdf(double t, double x) { return 5.0 * t + slope(x) * t * t / 2.0; }

double front_inverse(double u, double x) {
  const double total = (8.0 + 3.0 * x) / 2.0;
  const double target = u * total;
  // Root of slope/2 t^2 + 5 t - target = 0 in the cancellation-free form,
  // which also covers slope == 0.
  const double t = 2.0 * target / (5.0 + std::sqrt(25.0 + 2.0 * slope(x) * target));
  return std::clamp(t, 0.0, 1.0);
}

}  // namespace

double temporal_density(double t, double x, DensityOrientation orientation) {
  check_x(x);
  const double s = orientation == DensityOrientation::kReversed ? 1.0 - t : t;
  return 5.0 + slope(x) * s;
}

double temporal_cdf(double t, double x, DensityOrientation orientation) {
  check_x(x);
  if (orientation == DensityOrientation::kReversed) return front_cdf(1.0, x) - front_cdf(1.0 - t, x);
  return front_cdf(t, x);
}

double density_cdf_inverse(double u, double x, DensityOrientation orientation) {
  check_x(x);
  require(u >= 0.0 && u <= 1.0, ErrorKind::kInvalidArgument, "quantile must lie in [0,1]");
  if (orientation == DensityOrientation::kReversed) return 1.0 - front_inverse(1.0 - u, x);
  return front_inverse(u, x);
}

namespace {

template <typename Inverse>
SamplingPlan build_plan(std::size_t frame_count, std::size_t budget, double x, Inverse inverse) {
  require(frame_count >= 1 && budget >= 1, ErrorKind::kInvalidArgument,
          "frame count and budget must be positive");
  SamplingPlan plan{{}, budget, x};
  if (budget >= frame_count) {
    plan.indices.resize(frame_count);
    for (std::size_t i = 0; i < frame_count; ++i) plan.indices[i] = i;
    return plan;
  }
  std::vector<bool> used(frame_count, false);
  const auto last = static_cast<double>(frame_count - 1);
  for (std::size_t k = 1; k <= budget; ++k) {
    const double u = (static_cast<double>(k) - 0.5) / static_cast<double>(budget);
    const auto wanted = static_cast<std::size_t>(std::llround(inverse(u) * last));
    std::size_t pick = wanted;
    // Nearest unused index, larger side first.
    for (std::size_t d = 0; used[pick]; ++d) {
      const std::size_t step = d + 1;
      if (wanted + step < frame_count && !used[wanted + step]) {
        pick = wanted + step;
      } else if (wanted >= step && !used[wanted - step]) {
        pick = wanted - step;
      }
    }
    used[pick] = true;
    plan.indices.push_back(pick);
  }
  std::sort(plan.indices.begin(), plan.indices.end());
  return plan;
}

}  // namespace

SamplingPlan sample_frames(std::size_t frame_count, std::size_t budget, double x,
                           DensityOrientation orientation) {
  check_x(x);
  return build_plan(frame_count, budget, x,
                    [&](double u) { return density_cdf_inverse(u, x, orientation); });
}

SamplingPlan sample_frames_uniform(std::size_t frame_count, std::size_t budget) {
  return build_plan(frame_count, budget, 2.0 / 3.0, [](double u) { return u; });
}

std::vector<std::size_t> allocate_frames(std::span<const double> weights, std::size_t budget) {
  require(!weights.empty(), ErrorKind::kInvalidArgument, "allocate_frames needs weights");
  for (double w : weights) {
    require(std::isfinite(w) && w > 0.0, ErrorKind::kInvalidArgument, "weights must be positive");
  }
  // The objective is separable and concave, so granting frames one at a time
  // to the largest marginal gain w_i log((c+1)/c) reaches the integer optimum.
  // Empty segments have infinite gain; among those the heavier weight wins.
  const std::size_t n = weights.size();
  std::vector<std::size_t> counts(n, 0);
  for (std::size_t step = 0; step < budget; ++step) {
    std::size_t best = 0;
    double best_gain = -1.0;
    bool best_empty = false;
    for (std::size_t i = 0; i < n; ++i) {
      const bool empty = counts[i] == 0;
      const double gain =
          empty ? weights[i] : weights[i] * std::log1p(1.0 / static_cast<double>(counts[i]));
      if (empty != best_empty ? empty : gain > best_gain) {
        best = i;
        best_gain = gain;
        best_empty = empty;
      }
    }
    ++counts[best];
  }
  return counts;
}

}  // namespace xgc
