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
#include "xgc/brisque.hpp"
#include "xgc/error.hpp"
#include "xgc/fixtures.hpp"
#include "xgc/quality.hpp"

using namespace xgc;
using namespace xgc::brisque;

namespace {

// Near-Gaussian 8-bit texture built from raw engine output only.
LumaFrame golden_fixture() {
  std::mt19937_64 rng(2024);
  std::vector<double> s(48 * 40);
  for (double& v : s) {
    std::uint64_t code = 0;
    for (int k = 0; k < 4; ++k) code += rng() % 64;
    v = static_cast<double>(code) / 255.0;
  }
  return LumaFrame(48, 40, 8, std::move(s));
}

// Produced by oracle::brisque_features on golden_fixture().
constexpr std::array<double, kFeatureCount> kGolden = {
    3.3500000000000001, 0.76984339472205776, 1.097,
    -0.13825847245959927, 0.6295566525899895, 0.36261812349828021,
    1.0269999999999999, -0.12936252888139543, 0.65317299150625119,
    0.39242975615223002, 0.98199999999999998, -0.067078470851163807,
    0.61025851154785693, 0.47044665655769635, 0.998,
    -0.057280351298165166, 0.6047858237578928, 0.48529687050080417,
    2.927, 0.71368477639439676, 0.93700000000000006,
    -0.13499711520642091, 0.55305161240505485, 0.30196691299548067,
    1.0620000000000001, -0.17034775773285982, 0.56479710943574324,
    0.26430272255393472, 1.024, -0.053909307321155085,
    0.46042118863022269, 0.36330652962011695, 0.871,
    -0.1239261866511164, 0.61325954844900232, 0.36144696880495042,
};

bool is_shape_slot(std::size_t i) {
  const std::size_t j = i % 18;
  return j == 0 || (j >= 2 && (j - 2) % 4 == 0);
}

Plane random_plane(int w, int h, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  Plane p(w, h);
  for (double& v : p.values) v = u(rng);
  return p;
}

std::vector<double> draw_ggd(std::size_t n, double shape, double scale, std::mt19937_64& rng) {
  std::gamma_distribution<double> gamma(1.0 / shape, 1.0);
  std::bernoulli_distribution sign(0.5);
  std::vector<double> v(n);
  for (double& x : v) x = (sign(rng) ? 1.0 : -1.0) * scale * std::pow(gamma(rng), 1.0 / shape);
  return v;
}

std::vector<double> draw_aggd(std::size_t n, double shape, double left, double right,
                              std::mt19937_64& rng) {
  std::gamma_distribution<double> gamma(1.0 / shape, 1.0);
  std::bernoulli_distribution go_left(left / (left + right));
  std::vector<double> v(n);
  for (double& x : v) {
    const double mag = std::pow(gamma(rng), 1.0 / shape);
    x = go_left(rng) ? -left * mag : right * mag;
  }
  return v;
}

double side_variance(double shape, double scale) {
  return scale * scale * std::tgamma(3.0 / shape) / std::tgamma(1.0 / shape);
}

}  // namespace

TEST_CASE("gaussian taps are normalized and symmetric") {
  const auto& t = gaussian_taps();
  const auto o = oracle::gaussian_taps();
  double sum = 0.0;
  for (int k = 0; k < simd::kBlurTaps; ++k) {
    sum += t[k];
    CHECK(t[k] == doctest::Approx(o[k]).epsilon(1e-15));
    CHECK(t[k] == t[simd::kBlurTaps - 1 - k]);
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("separable blur equals the full 2-D window") {
  for (auto [w, h] : {std::pair{7, 7}, std::pair{31, 17}, std::pair{64, 48}}) {
    const auto p = random_plane(w, h, static_cast<std::uint64_t>(w * h));
    const auto got = gaussian_blur(p);
    const auto want = oracle::conv2d(p.values, w, h);
    for (std::size_t i = 0; i < want.size(); ++i) REQUIRE(std::fabs(got.values[i] - want[i]) <= 1e-12);
  }
}

TEST_CASE("local stats of a constant frame are exact") {
  const auto s = local_stats(LumaFrame::filled(40, 30, 0.37));
  for (double v : s.mu.values) REQUIRE(v == 0.37);
  for (double v : s.sigma.values) REQUIRE(v == 0.0);
}

TEST_CASE("impulse response at the centre is the kernel's centre weight") {
  Plane p(21, 21);
  p.at(10, 10) = 0.8;
  const auto s = local_stats(p);
  const double c = gaussian_taps()[3];
  CHECK(s.mu.at(10, 10) == doctest::Approx(c * c * 0.8).epsilon(1e-14));
  const auto want = oracle::conv2d(p.values, 21, 21);
  for (std::size_t i = 0; i < want.size(); ++i) REQUIRE(std::fabs(s.mu.values[i] - want[i]) <= 1e-14);
}

TEST_CASE("mscn of a constant frame is zero") {
  for (double c : {0.0, 0.25, 1.0}) {
    const auto m = mscn(LumaFrame::filled(33, 29, c));
    for (double v : m.values) REQUIRE(std::fabs(v) <= 1e-12);
  }
}

TEST_CASE("mscn matches the oracle") {
  const auto p = random_plane(40, 36, 8);
  const auto got = mscn(p);
  const auto want = oracle::mscn(p.values, 40, 36);
  for (std::size_t i = 0; i < want.size(); ++i) REQUIRE(std::fabs(got.values[i] - want[i]) <= 1e-9);
}

TEST_CASE("mscn of white noise is centred") {
  const auto m = mscn(random_plane(256, 256, 77));
  double mean = 0.0;
  for (double v : m.values) mean += v;
  mean /= static_cast<double>(m.values.size());
  CHECK(std::fabs(mean) <= 0.05);
}

TEST_CASE("mscn of a checkerboard flips sign with phase") {
  Plane p(32, 32);
  for (int r = 0; r < 32; ++r)
    for (int c = 0; c < 32; ++c) p.at(r, c) = (r + c) % 2;
  const auto m = mscn(p);
  for (int r = 0; r < 32; ++r)
    for (int c = 0; c + 1 < 32; ++c) REQUIRE(std::fabs(m.at(r, c) + m.at(r, c + 1)) <= 1e-12);
  CHECK(m.at(0, 0) < 0.0);
  CHECK(m.at(0, 1) > 0.0);
}

TEST_CASE("intensity offsets leave mscn unchanged and gains barely move it") {
  const auto p = random_plane(48, 48, 5, 0.0, 100.0);
  Plane shifted = p, scaled = p;
  for (double& v : shifted.values) v += 37.0;
  for (double& v : scaled.values) v *= 2.0;
  const auto base = mscn(p);
  const auto a = mscn(shifted);
  const auto b = mscn(scaled);
  for (std::size_t i = 0; i < base.values.size(); ++i) {
    REQUIRE(std::fabs(a.values[i] - base.values[i]) <= 1e-9);
    REQUIRE(std::fabs(b.values[i] - base.values[i]) <= 1e-3);
  }
}

TEST_CASE("pairwise products") {
  SUBCASE("all ones") {
    Plane m(6, 5);
    for (double& v : m.values) v = 1.0;
    const auto p = pairwise_products(m);
    for (const auto* f : {&p.horizontal, &p.vertical, &p.main_diagonal, &p.anti_diagonal})
      for (double v : f->values) REQUIRE(v == 1.0);
    CHECK(p.horizontal.width == 5);
    CHECK(p.horizontal.height == 5);
    CHECK(p.vertical.width == 6);
    CHECK(p.vertical.height == 4);
  }
  SUBCASE("a single -1 touches only its neighbour products") {
    Plane m(5, 5);
    for (double& v : m.values) v = 1.0;
    m.at(2, 2) = -1.0;
    const auto p = pairwise_products(m);
    int negatives = 0;
    for (const auto* f : {&p.horizontal, &p.vertical, &p.main_diagonal, &p.anti_diagonal})
      for (double v : f->values) negatives += v < 0.0;
    CHECK(negatives == 8);
    CHECK(p.horizontal.at(2, 1) == -1.0);
    CHECK(p.horizontal.at(2, 2) == -1.0);
    CHECK(p.vertical.at(1, 2) == -1.0);
    CHECK(p.main_diagonal.at(1, 1) == -1.0);
    CHECK(p.anti_diagonal.at(1, 2) == -1.0);  // m(1,3) m(2,2)
    CHECK(p.anti_diagonal.at(2, 1) == -1.0);  // m(2,2) m(3,1)
  }
  SUBCASE("random field against index loops") {
    const auto m = random_plane(9, 7, 3, -2.0, 2.0);
    const auto p = pairwise_products(m);
    for (int r = 0; r < 7; ++r) {
      for (int c = 0; c < 9; ++c) {
        if (c + 1 < 9) REQUIRE(p.horizontal.at(r, c) == m.at(r, c) * m.at(r, c + 1));
        if (r + 1 < 7) REQUIRE(p.vertical.at(r, c) == m.at(r, c) * m.at(r + 1, c));
        if (r + 1 < 7 && c + 1 < 9) REQUIRE(p.main_diagonal.at(r, c) == m.at(r, c) * m.at(r + 1, c + 1));
        if (r + 1 < 7 && c >= 1) REQUIRE(p.anti_diagonal.at(r, c - 1) == m.at(r, c) * m.at(r + 1, c - 1));
      }
    }
  }
}

TEST_CASE("shape lookup equals a linear scan of the grid") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ratio(0.05, 0.8);
  for (int i = 0; i < 300; ++i) {
    const double r = ratio(rng);
    REQUIRE(shape_from_ratio(r) == doctest::Approx(oracle::nearest_shape(r)).epsilon(1e-12));
  }
  CHECK(generalized_ratio(2.0) == doctest::Approx(2.0 / M_PI).epsilon(1e-14));
  CHECK(generalized_ratio(1.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("GGD shape recovery on normal and Laplacian draws") {
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(100000);
  for (double& x : v) x = normal(rng);
  const auto g = ggd_fit(v);
  CHECK(std::fabs(g.shape - 2.0) <= 0.05);
  CHECK(g.variance == doctest::Approx(1.0).epsilon(0.02));

  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution sign(0.5);
  for (double& x : v) x = (sign(rng) ? 1.0 : -1.0) * expo(rng);
  CHECK(std::fabs(ggd_fit(v).shape - 1.0) <= 0.05);
}

TEST_CASE("GGD round trip for other shapes") {
  std::mt19937_64 rng(99);
  for (double shape : {0.6, 1.5, 3.0}) {
    const auto v = draw_ggd(100000, shape, 0.7, rng);
    const auto g = ggd_fit(v);
    CHECK(std::fabs(g.shape - shape) <= 0.05 * shape);
    CHECK(g.variance == doctest::Approx(side_variance(shape, 0.7)).epsilon(0.03));
  }
}

TEST_CASE("estimator error shrinks with more samples") {
  std::mt19937_64 rng(5);
  double small_err = 0.0, large_err = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    small_err += std::fabs(ggd_fit(draw_ggd(1000, 1.2, 1.0, rng)).shape - 1.2);
    large_err += std::fabs(ggd_fit(draw_ggd(100000, 1.2, 1.0, rng)).shape - 1.2);
  }
  CHECK(large_err < small_err);
}

TEST_CASE("GGD and AGGD fallbacks") {
  const std::vector<double> zeros(50, 0.0);
  const auto g = ggd_fit(zeros);
  CHECK(g.shape == kShapeGridMax);
  CHECK(g.variance == 0.0);
  const auto a = aggd_fit(zeros);
  CHECK(a.shape == kShapeGridMax);
  CHECK(a.left_variance == 0.0);
  CHECK_THROWS_AS(ggd_fit(std::vector<double>{1.0}), Error);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> pos(0.1, 1.0);
  std::vector<double> positive(1000);
  for (double& x : positive) x = pos(rng);
  const auto p = aggd_fit(positive);
  CHECK(p.left_variance == 0.0);
  CHECK(p.right_variance > 0.0);
  CHECK(p.mean > 0.0);
}

TEST_CASE("AGGD on symmetric normal draws") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(100000);
  for (double& x : v) x = normal(rng);
  const auto a = aggd_fit(v);
  CHECK(a.left_variance == doctest::Approx(a.right_variance).epsilon(0.03));
  CHECK(std::fabs(a.mean) <= 0.02);
  CHECK(std::fabs(a.shape - 2.0) <= 0.1);
}

TEST_CASE("AGGD round trip") {
  std::mt19937_64 rng(77);
  for (auto [shape, left, right] : {std::tuple{1.5, 0.5, 1.0}, std::tuple{0.8, 1.2, 0.6}}) {
    const auto v = draw_aggd(100000, shape, left, right, rng);
    const auto a = aggd_fit(v);
    CHECK(a.shape == doctest::Approx(shape).epsilon(0.05));
    CHECK(a.left_variance == doctest::Approx(side_variance(shape, left)).epsilon(0.05));
    CHECK(a.right_variance == doctest::Approx(side_variance(shape, right)).epsilon(0.05));
    const auto o = oracle::aggd(v);
    CHECK(a.shape == doctest::Approx(o.shape).epsilon(1e-12));
    CHECK(a.mean == doctest::Approx(o.mean).epsilon(1e-9));
  }
}

TEST_CASE("box downsample averages 2x2 blocks and drops odd edges") {
  const auto p = random_plane(9, 7, 2);
  const auto d = box_downsample(p);
  REQUIRE(d.width == 4);
  REQUIRE(d.height == 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c)
      REQUIRE(d.at(r, c) == doctest::Approx((p.at(2 * r, 2 * c) + p.at(2 * r, 2 * c + 1) +
                                             p.at(2 * r + 1, 2 * c) + p.at(2 * r + 1, 2 * c + 1)) /
                                            4.0)
                                .epsilon(1e-15));
}

TEST_CASE("feature vector of a constant frame is the documented fallback") {
  const auto f = features(LumaFrame::filled(64, 64, 0.6));
  CHECK(f.values == constant_frame_features().values);
  CHECK(f.values[0] == kShapeGridMax);
  CHECK(f.values[1] == 0.0);
}

TEST_CASE("features of the fixture match the committed golden vector") {
  const auto f = features(golden_fixture());
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    INFO("feature " << i);
    if (is_shape_slot(i)) {
      CHECK(f.values[i] == doctest::Approx(kGolden[i]).epsilon(1e-12));
    } else {
      CHECK(std::fabs(f.values[i] - kGolden[i]) <= 1e-9);
    }
  }
}

TEST_CASE("features have positive shapes and non-negative variances") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = features(testing::noise_frame(40 + static_cast<int>(seed), 32, seed, 0.2, 0.6));
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      const std::size_t j = i % 18;
      if (is_shape_slot(i)) REQUIRE(f.values[i] > 0.0);
      if (j == 1 || (j >= 2 && ((j - 2) % 4 == 2 || (j - 2) % 4 == 3))) REQUIRE(f.values[i] >= 0.0);
    }
  }
  CHECK_THROWS_AS(features(LumaFrame::filled(13, 40, 0.5)), Error);
}

TEST_CASE("prediction examples") {
  SvrModel m;
  m.feature_min.fill(-1.0);
  m.feature_max.fill(1.0);
  BrisqueFeatures q;
  for (std::size_t i = 0; i < kFeatureCount; ++i) q.values[i] = 0.01 * static_cast<double>(i);
  m.support_vectors = {q.values};
  m.dual_coefs = {1.0};
  m.gamma = 3.7;
  m.rho = 0.0;
  CHECK(predict_raw(q, m) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(predict(q, m) == doctest::Approx(1.0).epsilon(1e-15));

  m.dual_coefs = {0.0};
  m.rho = -50.0;
  CHECK(predict(q, m) == 50.0);
  m.rho = -500.0;
  CHECK(predict(q, m) == 100.0);
  m.rho = 10.0;
  CHECK(predict(q, m) == 0.0);
}

TEST_CASE("rbf prediction equals a direct kernel sum") {
  const auto m = fixtures::synthetic_rbf_model(3, 40);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    BrisqueFeatures f;
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      std::uniform_real_distribution<double> u(m.feature_min[i], m.feature_max[i]);
      f.values[i] = u(rng);
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < m.support_vectors.size(); ++j) {
      double d2 = 0.0;
      for (std::size_t i = 0; i < kFeatureCount; ++i) {
        const double s = 2.0 * (f.values[i] - m.feature_min[i]) / (m.feature_max[i] - m.feature_min[i]) - 1.0;
        d2 += (s - m.support_vectors[j][i]) * (s - m.support_vectors[j][i]);
      }
      acc += m.dual_coefs[j] * std::exp(-m.gamma * d2);
    }
    REQUIRE(predict_raw(f, m) == doctest::Approx(acc - m.rho).epsilon(1e-9));
  }
}

TEST_CASE("linear prediction") {
  SvrModel m;
  m.kernel = KernelKind::kLinear;
  m.feature_min.fill(0.0);
  m.feature_max.fill(2.0);
  m.weights.fill(0.5);
  m.bias = 10.0;
  BrisqueFeatures f;
  f.values.fill(2.0);  // scales to 1
  CHECK(predict_raw(f, m) == doctest::Approx(10.0 + 18.0));
}

TEST_CASE("model files round trip and reject broken input") {
  testing::TempDir dir;
  for (const auto& m : {fixtures::synthetic_rbf_model(9, 5), fixtures::constant_model(42.0)}) {
    save_model(dir / "m.json", m);
    const auto back = load_model(dir / "m.json");
    CHECK(back.kernel == m.kernel);
    CHECK(back.gamma == m.gamma);
    CHECK(back.rho == m.rho);
    CHECK(back.support_vectors == m.support_vectors);
    CHECK(back.dual_coefs == m.dual_coefs);
    CHECK(back.feature_min == m.feature_min);
    CHECK(back.feature_max == m.feature_max);
  }
  SvrModel lin;
  lin.kernel = KernelKind::kLinear;
  lin.feature_min.fill(0.0);
  lin.feature_max.fill(1.0);
  lin.weights.fill(0.25);
  lin.bias = 3.0;
  save_model(dir / "l.json", lin);
  CHECK(load_model(dir / "l.json").weights == lin.weights);

  auto expect_model_error = [&](const std::string& text) {
    testing::write_bytes(dir / "bad.json", text);
    try {
      load_model(dir / "bad.json");
      return false;
    } catch (const Error& e) {
      return e.kind() == ErrorKind::kModel;
    }
  };
  CHECK(expect_model_error("not json"));
  CHECK(expect_model_error(R"({"kernel":"poly"})"));
  CHECK(expect_model_error(R"({"kernel":"rbf","gamma":1,"rho":0,"support_vectors":[[1,2]],"dual_coefs":[1]})"));
  try {
    load_model(dir / "absent.json");
    FAIL("expected model error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kModel);
  }
}

TEST_CASE("clip score is the mean over planned frames") {
  const auto model = fixtures::synthetic_rbf_model(4, 16);
  const BrisquePredictor predictor(model);
  std::vector<LumaFrame> frames;
  for (std::uint64_t s = 0; s < 6; ++s) frames.push_back(testing::noise_frame(40, 40, s, 0.1, 0.2 + 0.1 * s));
  const auto clip = Clip::from_frames(frames);

  SamplingPlan one{{3}, 1, 0.0};
  CHECK(score_clip(clip, one, predictor) == predictor.score(frames[3]));

  const auto same = Clip::from_frames(std::vector<LumaFrame>(4, frames[2]));
  SamplingPlan all{{0, 1, 2, 3}, 4, 0.0};
  CHECK(score_clip(same, all, predictor) == doctest::Approx(predictor.score(frames[2])).epsilon(1e-15));

  SamplingPlan mixed{{0, 2, 5}, 3, 0.0};
  const double want = (predict(features(frames[0]), model) + predict(features(frames[2]), model) +
                       predict(features(frames[5]), model)) / 3.0;
  CHECK(score_clip(clip, mixed, model) == doctest::Approx(want).epsilon(1e-15));

  CHECK_THROWS_AS(score_clip(clip, SamplingPlan{}, predictor), Error);
}

TEST_CASE("prediction is bit-stable") {
  const auto m = fixtures::synthetic_rbf_model(1, 32);
  const auto f = features(golden_fixture());
  const double a = predict_raw(f, m);
  for (int i = 0; i < 5; ++i) REQUIRE(predict_raw(f, m) == a);
}
