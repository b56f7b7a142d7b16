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

#include <cmath>
#include <random>

#include "oracles/oracles.hpp"
#include "xgc/error.hpp"
#include "xgc/temporal.hpp"

using namespace xgc;

namespace {

std::pair<std::size_t, std::size_t> decile_counts(const SamplingPlan& plan, std::size_t frames) {
  std::size_t first = 0, last = 0;
  for (auto i : plan.indices) {
    if (i < frames / 10) ++first;
    if (i >= frames - frames / 10) ++last;
  }
  return {first, last};
}

}  // namespace

TEST_CASE("density endpoints follow the weight ratio") {
  CHECK(temporal_density(0.0, 0.0) == 5.0);
  CHECK(temporal_density(1.0, 0.0) == 3.0);
  CHECK(temporal_density(1.0, 1.0) == 6.0);
  CHECK(temporal_density(0.0, 1.0, DensityOrientation::kReversed) == 6.0);
  CHECK(temporal_density(1.0, 1.0, DensityOrientation::kReversed) == 5.0);
  CHECK(temporal_cdf(1.0, 0.4) == doctest::Approx((8.0 + 1.2) / 2.0));
}

TEST_CASE("inverse cdf examples") {
  for (double x : {0.0, 0.3, 1.0}) {
    CHECK(density_cdf_inverse(0.0, x) == 0.0);
    CHECK(density_cdf_inverse(1.0, x) == doctest::Approx(1.0).epsilon(1e-15));
  }
  for (int k = 0; k <= 20; ++k) {
    const double u = k / 20.0;
    CHECK(density_cdf_inverse(u, 2.0 / 3.0) == doctest::Approx(u).epsilon(1e-14));
  }
  CHECK(density_cdf_inverse(0.5, 0.0) == doctest::Approx((5.0 - std::sqrt(17.0)) / 2.0).epsilon(1e-14));
}

TEST_CASE("inverse cdf agrees with numerical integration") {
  for (double x : {0.0, 0.1, 0.5, 2.0 / 3.0, 0.9, 1.0}) {
    const oracle::NumericInverse numeric(x);
    for (int k = 0; k <= 50; ++k) {
      const double u = k / 50.0;
      REQUIRE(density_cdf_inverse(u, x) == doctest::Approx(numeric(u)).epsilon(1e-8));
    }
  }
}

TEST_CASE("reversed orientation mirrors the front-weighted one") {
  for (double x : {0.0, 0.4, 1.0}) {
    for (int k = 0; k <= 10; ++k) {
      const double u = k / 10.0;
      CHECK(density_cdf_inverse(u, x, DensityOrientation::kReversed) ==
            doctest::Approx(1.0 - density_cdf_inverse(1.0 - u, x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("inverse cdf rejects bad arguments") {
  CHECK_THROWS_AS(density_cdf_inverse(1.5, 0.5), Error);
  CHECK_THROWS_AS(density_cdf_inverse(0.5, -0.1), Error);
}

TEST_CASE("budget at or above the frame count keeps every frame") {
  const auto plan = sample_frames(12, 12, 0.3);
  CHECK(plan.indices.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) CHECK(plan.indices[i] == i);
  CHECK(sample_frames(5, 40, 0.3).indices.size() == 5);
}

TEST_CASE("uniform density lands near the midpoints") {
  const auto plan = sample_frames(100, 10, 2.0 / 3.0);
  REQUIRE(plan.indices.size() == 10);
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(std::llabs(static_cast<long long>(plan.indices[k]) - static_cast<long long>(5 + 10 * k)) <= 1);
  }
  CHECK(sample_frames_uniform(100, 10).indices == plan.indices);
}

TEST_CASE("x = 0.1 plan for 150 frames follows the oracle and is front-heavy") {
  const auto plan = sample_frames(150, 10, 0.1);
  const oracle::NumericInverse numeric(0.1);
  REQUIRE(plan.indices.size() == 10);
  for (std::size_t k = 0; k < 10; ++k) {
    const double t = numeric((k + 0.5) / 10.0);
    CHECK(plan.indices[k] == static_cast<std::size_t>(std::llround(t * 149.0)));
  }
  std::size_t front = 0;
  for (auto i : plan.indices) front += i < 75;
  CHECK(front > 5);
}

TEST_CASE("plans are strictly increasing and in range") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> frames(1, 400), budget(1, 60);
  std::uniform_real_distribution<double> xs(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const auto n = frames(rng);
    const auto b = budget(rng);
    const auto x = xs(rng);
    for (auto o : {DensityOrientation::kFrontWeighted, DensityOrientation::kReversed}) {
      const auto plan = sample_frames(n, b, x, o);
      REQUIRE(plan.indices.size() == std::min(n, b));
      for (std::size_t k = 0; k < plan.indices.size(); ++k) {
        REQUIRE(plan.indices[k] < n);
        if (k > 0) REQUIRE(plan.indices[k] > plan.indices[k - 1]);
      }
      REQUIRE(sample_frames(n, b, x, o).indices == plan.indices);
    }
  }
}

TEST_CASE("duplicate indices shift to unused neighbours") {
  // Short clip, large budget: many quantiles collide.
  const auto plan = sample_frames(12, 11, 0.0);
  CHECK(plan.indices.size() == 11);
}

TEST_CASE("first/last decile ratio decreases strictly with x") {
  double prev = 1e9;
  for (int k = 0; k <= 10; ++k) {
    const auto plan = sample_frames(1000000, 1000, k / 10.0);
    const auto [first, last] = decile_counts(plan, 1000000);
    const double ratio = static_cast<double>(first) / static_cast<double>(last);
    CHECK(ratio < prev);
    prev = ratio;
  }
}

TEST_CASE("allocation examples") {
  CHECK(allocate_frames(std::vector<double>{1, 1}, 10) == std::vector<std::size_t>{5, 5});
  CHECK(allocate_frames(std::vector<double>{5, 3}, 8) == std::vector<std::size_t>{5, 3});
  CHECK(allocate_frames(std::vector<double>{5, 6}, 11) == std::vector<std::size_t>{5, 6});
  CHECK(allocate_frames(std::vector<double>{1, 1, 1}, 0) == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("allocation ties go to the lower index") {
  CHECK(allocate_frames(std::vector<double>{1, 1}, 1) == std::vector<std::size_t>{1, 0});
  CHECK(allocate_frames(std::vector<double>{2, 2, 2}, 4) == std::vector<std::size_t>{2, 1, 1});
}

TEST_CASE("allocation rejects empty and non-positive weights") {
  CHECK_THROWS_AS(allocate_frames(std::vector<double>{}, 3), Error);
  CHECK_THROWS_AS(allocate_frames(std::vector<double>{1.0, 0.0}, 3), Error);
}

TEST_CASE("allocation matches exhaustive search") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> w(0.05, 5.0);
  for (int trial = 0; trial < 30; ++trial) {
    for (std::size_t segments = 1; segments <= 4; ++segments) {
      std::vector<double> weights(segments);
      for (double& v : weights) v = w(rng);
      for (std::size_t budget = 0; budget <= 12; ++budget) {
        const auto counts = allocate_frames(weights, budget);
        std::size_t total = 0;
        for (auto c : counts) total += c;
        REQUIRE(total == budget);
        const auto got = oracle::allocation_score(weights, counts);
        const auto best = oracle::best_allocation(weights, budget);
        REQUIRE(got.empty == best.empty);
        REQUIRE(got.value >= best.value - 1e-12);
      }
    }
  }
}

TEST_CASE("large budgets approach proportional shares") {
  const std::vector<double> weights{5, 4, 3};
  const auto counts = allocate_frames(weights, 1200);
  CHECK(counts[0] == 500);
  CHECK(counts[1] == 400);
  CHECK(counts[2] == 300);
}
