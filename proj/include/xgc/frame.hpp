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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace xgc {

/// Single-channel luminance image. Samples are row-major, normalized to
/// [0,1] (raw code value divided by 2^bit_depth - 1).
///
/// The type itself accepts any non-empty size so that crops and fragments
/// can be represented; decoders enforce the 32x32 minimum for clip input.
class LumaFrame {
 public:
  LumaFrame() = default;
  LumaFrame(int width, int height, int bit_depth, std::vector<double> samples);

  static LumaFrame filled(int width, int height, double value, int bit_depth = 8);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int bit_depth() const noexcept { return bit_depth_; }
  bool empty() const noexcept { return samples_.empty(); }

  std::span<const double> samples() const noexcept { return samples_; }
  std::span<const double> row(int r) const noexcept {
    return {samples_.data() + static_cast<std::size_t>(r) * width_,
            static_cast<std::size_t>(width_)};
  }
  double at(int r, int c) const noexcept {
    return samples_[static_cast<std::size_t>(r) * width_ + c];
  }

  friend bool operator==(const LumaFrame&, const LumaFrame&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int bit_depth_ = 8;
  std::vector<double> samples_;
};

/// Minimum decoded frame side accepted by the readers.
inline constexpr int kMinFrameSide = 32;

struct FrameFormat {
  int width = 0;
  int height = 0;
  int bit_depth = 8;

  friend bool operator==(const FrameFormat&, const FrameFormat&) = default;
};

/// Random access to the frames of one clip. Implementations must be safe
/// for concurrent calls to frame().
class FrameSource {
 public:
  virtual ~FrameSource() = default;
  virtual FrameFormat format() const = 0;
  virtual std::size_t frame_count() const = 0;
  virtual LumaFrame frame(std::size_t index) const = 0;
};

/// Integer code planes held in memory, normalized on access.
class CodePlaneSource final : public FrameSource {
 public:
  CodePlaneSource(FrameFormat format, std::vector<std::vector<std::uint16_t>> planes);

  FrameFormat format() const override { return format_; }
  std::size_t frame_count() const override { return planes_.size(); }
  LumaFrame frame(std::size_t index) const override;

  std::span<const std::uint16_t> codes(std::size_t index) const { return planes_.at(index); }

 private:
  FrameFormat format_;
  std::vector<std::vector<std::uint16_t>> planes_;
};

/// Already-normalized frames.
class MemoryFrameSource final : public FrameSource {
 public:
  explicit MemoryFrameSource(std::vector<LumaFrame> frames);

  FrameFormat format() const override { return format_; }
  std::size_t frame_count() const override { return frames_.size(); }
  LumaFrame frame(std::size_t index) const override { return frames_.at(index); }

 private:
  FrameFormat format_;
  std::vector<LumaFrame> frames_;
};

/// An ordered, non-empty sequence of same-format luma frames.
class Clip {
 public:
  explicit Clip(std::shared_ptr<const FrameSource> source,
                std::optional<double> fps = std::nullopt);

  static Clip from_frames(std::vector<LumaFrame> frames);

  std::size_t frame_count() const { return source_->frame_count(); }
  FrameFormat format() const { return source_->format(); }
  int width() const { return format().width; }
  int height() const { return format().height; }
  std::optional<double> fps() const noexcept { return fps_; }

  LumaFrame frame(std::size_t index) const;

  /// Copy of this clip with every frame decoded into memory as code values.
  Clip preloaded() const;

  const FrameSource& source() const noexcept { return *source_; }

 private:
  std::shared_ptr<const FrameSource> source_;
  std::optional<double> fps_;
};

/// Quantize a normalized sample back to its integer code.
std::uint16_t to_code(double sample, int bit_depth);

}  // namespace xgc
