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

#include <cstdlib>
#include <cstring>
#include <random>

#include "test_support.hpp"
#include "xgc/brisque.hpp"
#include "xgc/simd/kernels.hpp"

using namespace xgc;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<double> values(std::size_t n, std::uint64_t seed, double lo = -2.0, double hi = 2.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("simd scalar backend is always available") {
  const auto backends = simd::available_backends();
  REQUIRE(!backends.empty());
  CHECK(backends.front() == simd::Backend::kScalar);
  CHECK(simd::kernels_for(simd::Backend::kScalar) != nullptr);
  const char* env = std::getenv("XGC_SIMD");
  if (env != nullptr && std::string(env) == "scalar") CHECK(simd::active().backend == simd::Backend::kScalar);
  MESSAGE("active backend: " << simd::name(simd::active().backend));
}

TEST_CASE("simd element-wise kernels match scalar bit for bit") {
  const auto& ref = simd::detail::scalar_kernels();
  for (auto backend : simd::available_backends()) {
    const auto& k = *simd::kernels_for(backend);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u, 1001u}) {
      const auto a = values(n, n + 1);
      const auto b = values(n, n + 2, 0.0, 1.0);
      const auto c = values(n, n + 3, 0.0, 0.5);
      std::vector<double> o1(n), o2(n);

      ref.multiply(a.data(), b.data(), o1.data(), n);
      k.multiply(a.data(), b.data(), o2.data(), n);
      REQUIRE(same_bits(o1, o2));

      ref.subtract_scalar(a.data(), 0.3, o1.data(), n);
      k.subtract_scalar(a.data(), 0.3, o2.data(), n);
      REQUIRE(same_bits(o1, o2));

      ref.local_sigma(a.data(), b.data(), o1.data(), n);
      k.local_sigma(a.data(), b.data(), o2.data(), n);
      REQUIRE(same_bits(o1, o2));

      ref.normalize(a.data(), b.data(), c.data(), 1.0 / 255.0, o1.data(), n);
      k.normalize(a.data(), b.data(), c.data(), 1.0 / 255.0, o2.data(), n);
      REQUIRE(same_bits(o1, o2));

      const auto r0 = values(2 * n, n + 4), r1 = values(2 * n, n + 5);
      ref.box_halve(r0.data(), r1.data(), o1.data(), n);
      k.box_halve(r0.data(), r1.data(), o2.data(), n);
      REQUIRE(same_bits(o1, o2));
    }
  }
}

TEST_CASE("simd blur kernels match scalar bit for bit") {
  const auto& ref = simd::detail::scalar_kernels();
  const auto& taps = brisque::gaussian_taps();
  for (auto backend : simd::available_backends()) {
    const auto& k = *simd::kernels_for(backend);
    for (std::size_t w : {4u, 5u, 7u, 8u, 9u, 13u, 64u, 333u}) {
      const auto in = values(w, w);
      std::vector<double> o1(w), o2(w);
      ref.blur_row(in.data(), o1.data(), w, taps.data());
      k.blur_row(in.data(), o2.data(), w, taps.data());
      REQUIRE(same_bits(o1, o2));

      std::vector<std::vector<double>> rows;
      std::vector<const double*> ptrs;
      for (int r = 0; r < simd::kBlurTaps; ++r) rows.push_back(values(w, 100 + w + r));
      for (const auto& r : rows) ptrs.push_back(r.data());
      ref.blur_column(ptrs.data(), o1.data(), w, taps.data());
      k.blur_column(ptrs.data(), o2.data(), w, taps.data());
      REQUIRE(same_bits(o1, o2));
    }
  }
}

TEST_CASE("simd reductions match scalar bit for bit") {
  const auto& ref = simd::detail::scalar_kernels();
  for (auto backend : simd::available_backends()) {
    const auto& k = *simd::kernels_for(backend);
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 7u, 36u, 1000u, 4099u}) {
      auto v = values(n, 7 * n + 1);
      if (n > 2) v[1] = 0.0;
      const auto m1 = ref.moments(v.data(), n), m2 = k.moments(v.data(), n);
      REQUIRE(same_bits(m1.sum_abs, m2.sum_abs));
      REQUIRE(same_bits(m1.sum_sq, m2.sum_sq));
      REQUIRE(same_bits(m1.left_sum_sq, m2.left_sum_sq));
      REQUIRE(same_bits(m1.right_sum_sq, m2.right_sum_sq));
      REQUIRE(m1.left_count == m2.left_count);
      REQUIRE(m1.right_count == m2.right_count);

      const auto s1 = ref.sum_sq(v.data(), n), s2 = k.sum_sq(v.data(), n);
      REQUIRE(same_bits(s1.sum, s2.sum));
      REQUIRE(same_bits(s1.sum_sq, s2.sum_sq));

      const auto u = values(n, 9 * n + 2);
      REQUIRE(same_bits(ref.squared_distance(v.data(), u.data(), n), k.squared_distance(v.data(), u.data(), n)));
    }
  }
}

TEST_CASE("simd feature extraction is identical across backends") {
  const auto& ref = simd::detail::scalar_kernels();
  const auto frame = testing::noise_frame(97, 61, 3, 0.1, 0.9);
  const auto want = brisque::features(frame, ref);
  for (auto backend : simd::available_backends()) {
    const auto got = brisque::features(frame, *simd::kernels_for(backend));
    for (std::size_t i = 0; i < brisque::kFeatureCount; ++i) REQUIRE(same_bits(got.values[i], want.values[i]));
  }
}
