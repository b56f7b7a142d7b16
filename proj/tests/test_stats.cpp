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
#include "test_support.hpp"
#include "xgc/error.hpp"
#include "xgc/stats.hpp"

using namespace xgc;
using namespace xgc::stats;

namespace {

using Vec = std::vector<double>;

}  // namespace

TEST_CASE("rank correlation examples") {
  const Vec a{1, 2, 3, 4};
  CHECK(srocc(a, a).value == 1.0);
  CHECK(srocc(a, Vec{4, 3, 2, 1}).value == -1.0);
  CHECK(srocc(a, Vec{1, 3, 2, 4}).value == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(krocc(a, a).value == 1.0);
  CHECK(krocc(Vec{1, 2, 3}, Vec{1, 3, 2}).value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("pearson examples") {
  const Vec a{0.3, 1.7, 2.2, 5.0, 4.1};
  Vec b(a.size()), c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    b[i] = 2 * a[i] + 1;
    c[i] = -a[i];
  }
  CHECK(plcc(a, b).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(plcc(a, c).value == doctest::Approx(-1.0).epsilon(1e-15));
  const Vec x{1, 2, 3, 4, 5, 6}, y{2, 1, 4, 3, 7, 5};
  CHECK(pearson(x, y).value == doctest::Approx(oracle::pearson(x, y)).epsilon(1e-15));
}

TEST_CASE("degenerate inputs are flagged") {
  const Vec flat{2, 2, 2, 2}, a{1, 2, 3, 4};
  for (const auto& c : {pearson(flat, a), srocc(flat, a), krocc(flat, a), krocc(flat, flat)}) {
    CHECK(c.degenerate);
    CHECK(c.value == 0.0);
  }
  CHECK_FALSE(pearson(a, a).degenerate);
  CHECK_THROWS_AS(pearson(Vec{1}, Vec{1}), Error);
  CHECK_THROWS_AS(srocc(Vec{1, 2}, Vec{1, 2, 3}), Error);
}

TEST_CASE("average ranks share tied positions") {
  CHECK(average_ranks(Vec{10, 20, 20, 5}) == Vec{2, 3.5, 3.5, 1});
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto v = testing::random_vector(50, rng, 7);
    CHECK(average_ranks(v) == oracle::ranks(v));
  }
}

TEST_CASE("correlations equal the brute-force oracles on random vectors") {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<std::size_t> len(2, 200);
  for (int t = 0; t < 100; ++t) {
    const auto n = len(rng);
    const int levels = t % 3 == 0 ? 5 : 0;  // every third pair is heavily tied
    const auto a = testing::random_vector(n, rng, levels);
    const auto b = testing::random_vector(n, rng, levels);
    REQUIRE(std::fabs(pearson(a, b).value - oracle::pearson(a, b)) <= 1e-12);
    REQUIRE(std::fabs(srocc(a, b).value - oracle::spearman(a, b)) <= 1e-12);
    REQUIRE(std::fabs(krocc(a, b).value - oracle::kendall_tau_b(a, b)) <= 1e-12);
    if (levels == 0) REQUIRE(std::fabs(srocc(a, b).value - oracle::spearman_no_ties(a, b)) <= 1e-12);
  }
}

TEST_CASE("correlations stay inside [-1, 1]") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto a = testing::random_vector(30, rng, t % 2 ? 3 : 0);
    const auto b = testing::random_vector(30, rng, t % 2 ? 3 : 0);
    for (const auto& c : {pearson(a, b), srocc(a, b), krocc(a, b), plcc(a, b, true)}) {
      REQUIRE(c.value >= -1.0);
      REQUIRE(c.value <= 1.0);
    }
  }
}

TEST_CASE("rank correlations are invariant under increasing transforms") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto a = testing::random_vector(60, rng);
    const auto b = testing::random_vector(60, rng);
    Vec fa(a.size()), gb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      fa[i] = std::exp(3 * a[i]);
      gb[i] = b[i] * b[i] * b[i] + 2;
    }
    REQUIRE(srocc(fa, gb).value == doctest::Approx(srocc(a, b).value).epsilon(1e-12));
    REQUIRE(krocc(fa, gb).value == doctest::Approx(krocc(a, b).value).epsilon(1e-12));
  }
}

TEST_CASE("pearson affine invariance") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto a = testing::random_vector(40, rng);
    const auto b = testing::random_vector(40, rng);
    const double base = plcc(a, b).value;
    for (double alpha : {3.0, 0.2, -1.5}) {
      Vec s(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) s[i] = alpha * b[i] + 7.0;
      REQUIRE(std::fabs(plcc(a, s).value - (alpha > 0 ? base : -base)) <= 1e-12);
    }
  }
}

TEST_CASE("logistic fit recovers a noiseless logistic") {
  const Logistic4 truth{90.0, 10.0, 0.4, 0.1};
  Vec a, b;
  for (int i = 0; i <= 40; ++i) {
    a.push_back(i / 40.0);
    b.push_back(truth(i / 40.0));
  }
  const auto fit = fit_logistic(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(fit(a[i]) == doctest::Approx(b[i]).epsilon(1e-6));
  CHECK(plcc(a, b, true).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(plcc(a, b, true).value >= plcc(a, b, false).value);
}

TEST_CASE("logistic plcc is deterministic and handles constant predictors") {
  std::mt19937_64 rng(6);
  const auto a = testing::random_vector(50, rng);
  const auto b = testing::random_vector(50, rng);
  CHECK(plcc(a, b, true).value == plcc(a, b, true).value);
  const Vec flat(10, 1.0), y{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const auto c = plcc(flat, y, true);
  CHECK(c.degenerate);
}

TEST_CASE("mean and median") {
  CHECK(mean(Vec{1, 2, 6}) == 3.0);
  CHECK(median(Vec{5, 1, 3}) == 3.0);
  CHECK(median(Vec{4, 1, 3, 2}) == 2.5);
  CHECK_THROWS_AS(median(Vec{}), Error);
}
