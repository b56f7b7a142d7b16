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

#include "xgc/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "xgc/classify.hpp"
#include "xgc/error.hpp"
#include "xgc/media_io.hpp"
#include "xgc/temporal.hpp"
#include "xgc/util.hpp"

namespace xgc::fixtures {

namespace {

std::uint64_t stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(seed ^ mix64(a ^ mix64(b)));
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

/// Smooth structure with edges: oriented sinusoids plus flat rectangles.
std::vector<double> texture(int side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> img(static_cast<std::size_t>(side) * side, 0.5);
  for (int k = 0; k < 3; ++k) {
    const double angle = unit(rng) * std::numbers::pi;
    const double freq = 0.02 + 0.08 * unit(rng);
    const double amp = 0.04 + 0.06 * unit(rng);
    const double phase = unit(rng) * 2.0 * std::numbers::pi;
    const double cx = std::cos(angle) * freq, cy = std::sin(angle) * freq;
    for (int r = 0; r < side; ++r) {
      for (int c = 0; c < side; ++c) {
        img[static_cast<std::size_t>(r) * side + c] += amp * std::sin(cx * c + cy * r + phase);
      }
    }
  }
  for (int k = 0; k < 12; ++k) {
    const int w = 16 + static_cast<int>(unit(rng) * side / 3);
    const int h = 16 + static_cast<int>(unit(rng) * side / 3);
    const int r0 = static_cast<int>(unit(rng) * (side - h));
    const int c0 = static_cast<int>(unit(rng) * (side - w));
    const double delta = (unit(rng) - 0.5) * 0.3;
    for (int r = r0; r < r0 + h; ++r) {
      for (int c = c0; c < c0 + w; ++c) img[static_cast<std::size_t>(r) * side + c] += delta;
    }
  }
  for (double& v : img) v = std::clamp(v, 0.15, 0.85);
  return img;
}

}  // namespace

GeneratedSource::GeneratedSource(FrameFormat format, std::size_t count, Generator generate)
    : format_(format), count_(count), generate_(std::move(generate)) {
  require(count_ >= 1, ErrorKind::kInvalidArgument, "generated clip needs at least one frame");
}

LumaFrame GeneratedSource::frame(std::size_t index) const {
  require(index < count_, ErrorKind::kInvalidArgument, "frame index out of range");
  return generate_(index);
}

Clip separation_clip(bool high_res, std::size_t index, std::uint64_t seed, std::size_t frames) {
  const std::uint64_t clip_seed = stream(seed, high_res ? 2 : 1, index);
  std::mt19937_64 rng(clip_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (high_res) {
    const double level = 0.5 + 0.2 * unit(rng);
    const double sigma = 0.01 + 0.02 * unit(rng);
    FrameFormat fmt{1920, 1080, 8};
    return Clip(std::make_shared<GeneratedSource>(fmt, frames, [=](std::size_t f) {
      std::mt19937_64 noise_rng(stream(clip_seed, f + 1));
      std::normal_distribution<double> noise(0.0, sigma);
      std::vector<double> s(static_cast<std::size_t>(fmt.width) * fmt.height);
      for (double& v : s) v = clamp01(level + noise(noise_rng));
      return LumaFrame(fmt.width, fmt.height, 8, std::move(s));
    }));
  }
  const double strength = 0.6 + 0.3 * unit(rng);
  const double sigma = 0.03 + 0.05 * unit(rng);
  FrameFormat fmt{320, 240, 8};
  return Clip(std::make_shared<GeneratedSource>(fmt, frames, [=](std::size_t f) {
    std::mt19937_64 noise_rng(stream(clip_seed, f + 1));
    std::normal_distribution<double> noise(0.0, sigma);
    std::vector<double> s(static_cast<std::size_t>(fmt.width) * fmt.height);
    for (int r = 0; r < fmt.height; ++r) {
      for (int c = 0; c < fmt.width; ++c) {
        const double dy = (r - fmt.height / 2.0) / (fmt.height / 2.0);
        const double dx = (c - fmt.width / 2.0) / (fmt.width / 2.0);
        const double v = 0.55 * (1.0 - strength * 0.5 * (dx * dx + dy * dy));
        s[static_cast<std::size_t>(r) * fmt.width + c] = clamp01(v + noise(noise_rng));
      }
    }
    return LumaFrame(fmt.width, fmt.height, 8, std::move(s));
  }));
}

Clip latency_clip(std::uint64_t seed, std::size_t frames, int width, int height) {
  FrameFormat fmt{width, height, 8};
  return Clip(std::make_shared<GeneratedSource>(fmt, frames, [=](std::size_t f) {
    std::mt19937_64 rng(stream(seed, 3, f));
    std::normal_distribution<double> noise(0.0, 0.02);
    std::vector<double> s(static_cast<std::size_t>(width) * height);
    const double shift = static_cast<double>(f) * 4.0;
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        const double base = 0.3 + 0.4 * (c + shift) / (width + 600.0) + 0.1 * r / height;
        s[static_cast<std::size_t>(r) * width + c] = clamp01(base + noise(rng));
      }
    }
    return LumaFrame(width, height, 8, std::move(s));
  }));
}

std::vector<QualityClip> quality_dataset(std::size_t n_clips, std::uint64_t seed,
                                         const QualityLayout& layout) {
  require(n_clips >= 2, ErrorKind::kInvalidArgument, "quality dataset needs at least two clips");
  const int side = layout.side;
  const ClassifierConfig defaults;
  const double x = std::clamp(
      defaults.alpha * resolution_term(side, side, defaults.h_m, defaults.w_m), 0.0, defaults.alpha);
  const auto plan = sample_frames(layout.frames, layout.budget, x);
  std::vector<bool> carries_signal(layout.frames, false);
  for (auto i : plan.indices) carries_signal[i] = true;

  std::vector<QualityClip> out;
  for (std::size_t k = 0; k < n_clips; ++k) {
    const std::uint64_t clip_seed = stream(seed, 4, k);
    std::mt19937_64 rng(clip_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // Evenly spread signal levels in a seeded order.
    const double level = (static_cast<double>(k) + unit(rng)) / static_cast<double>(n_clips);
    const double sigma = layout.min_sigma + (layout.max_sigma - layout.min_sigma) * level;
    const double impulse_density =
        layout.border_min_density + (layout.border_max_density - layout.border_min_density) * unit(rng);
    std::vector<double> frame_sigma(layout.frames);
    for (std::size_t f = 0; f < layout.frames; ++f) {
      frame_sigma[f] = carries_signal[f]
                           ? sigma
                           : layout.min_sigma + (layout.max_sigma - layout.min_sigma) * unit(rng);
    }
    const auto base = texture(side, stream(clip_seed, 5));

    std::vector<LumaFrame> frames;
    for (std::size_t f = 0; f < layout.frames; ++f) {
      std::mt19937_64 noise_rng(stream(clip_seed, 6, f));
      std::normal_distribution<double> gauss(0.0, 1.0);
      std::vector<double> s(base.size());
      for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
          const bool edge = r < layout.border || c < layout.border || r >= side - layout.border ||
                            c >= side - layout.border;
          const auto i = static_cast<std::size_t>(r) * side + c;
          if (edge) {
            // Sparse impulses on a flat band give heavy-tailed MSCN values.
            const double u = unit(noise_rng);
            s[i] = u < impulse_density ? (u < impulse_density / 2 ? 0.0 : 1.0) : 0.5;
          } else {
            s[i] = clamp01(base[i] + frame_sigma[f] * gauss(noise_rng));
          }
        }
      }
      // Quantize as an 8-bit file would.
      for (double& v : s) v = to_code(v, 8) / 255.0;
      frames.emplace_back(side, side, 8, std::move(s));
    }
    std::ostringstream id;
    id << "q" << (k < 10 ? "00" : k < 100 ? "0" : "") << k;
    out.push_back({id.str(), Clip::from_frames(std::move(frames)), 5.0 - 4.0 * level});
  }
  return out;
}

std::filesystem::path write_quality_dataset(const std::filesystem::path& dir, std::size_t n_clips,
                                            std::uint64_t seed, const QualityLayout& layout) {
  std::filesystem::create_directories(dir);
  std::ostringstream manifest;
  manifest.precision(17);
  manifest << "clip_id,path,kind,mos\n";
  for (const auto& q : quality_dataset(n_clips, seed, layout)) {
    const auto name = q.clip_id + ".y4m";
    write_y4m(dir / name, q.clip, ChromaLayout::kMono);
    manifest << q.clip_id << ',' << name << ",y4m," << q.mos << '\n';
  }
  const auto path = dir / "manifest.csv";
  write_file_atomic(path, manifest.str());
  return path;
}

brisque::SvrModel constant_model(double score) {
  brisque::SvrModel m;
  m.kernel = brisque::KernelKind::kRbf;
  m.gamma = 1.0;
  m.rho = -score;
  m.feature_min.fill(0.0);
  m.feature_max.fill(1.0);
  m.support_vectors.push_back({});
  m.dual_coefs.push_back(0.0);
  return m;
}

brisque::SvrModel synthetic_rbf_model(std::uint64_t seed, std::size_t n_support) {
  std::mt19937_64 rng(stream(seed, 7));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  brisque::SvrModel m;
  m.kernel = brisque::KernelKind::kRbf;
  m.gamma = 0.05;
  m.rho = -40.0;
  for (std::size_t i = 0; i < brisque::kFeatureCount; ++i) {
    m.feature_min[i] = i % 18 == 0 ? 0.2 : 0.0;
    m.feature_max[i] = i % 18 == 0 ? 10.0 : 1.0;
  }
  for (std::size_t k = 0; k < n_support; ++k) {
    std::array<double, brisque::kFeatureCount> sv{};
    for (double& v : sv) v = unit(rng);
    m.support_vectors.push_back(sv);
    m.dual_coefs.push_back(20.0 * unit(rng));
  }
  return m;
}

}  // namespace xgc::fixtures
