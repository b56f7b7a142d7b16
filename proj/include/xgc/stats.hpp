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

// Correlation between predicted quality and subjective scores.

#include <span>
#include <vector>

namespace xgc::stats {

struct Correlation {
  double value = 0.0;
  /// Set when a variance term is zero; value is then 0.
  bool degenerate = false;
};

/// 1-based ranks; tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> v);

Correlation pearson(std::span<const double> a, std::span<const double> b);

/// Spearman: Pearson correlation of average ranks.
Correlation srocc(std::span<const double> a, std::span<const double> b);

/// Kendall tau-b in O(n log n) (merge-sort discordance count with tie terms).
Correlation krocc(std::span<const double> a, std::span<const double> b);

/// Pearson on raw values, or on a -> logistic(a) when `logistic` is set.
Correlation plcc(std::span<const double> a, std::span<const double> b, bool logistic = false);

/// Four-parameter logistic
///   f(v) = b2 + (b1 - b2) / (1 + exp(-(v - b3) / |b4|))
/// fitted to (a, b) by damped Gauss-Newton (Levenberg-Marquardt), at most
/// 200 iterations, starting from b1 = max b, b2 = min b, b3 = mean a,
/// b4 = std a (1 when a is constant).
struct Logistic4 {
  double b1 = 0.0, b2 = 0.0, b3 = 0.0, b4 = 1.0;
  double operator()(double v) const;
};

Logistic4 fit_logistic(std::span<const double> a, std::span<const double> b);

double mean(std::span<const double> v);
double median(std::vector<double> v);

}  // namespace xgc::stats
