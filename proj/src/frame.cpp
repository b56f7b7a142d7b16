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

#include "xgc/frame.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "xgc/error.hpp"

namespace xgc {

namespace {

double max_code(int bit_depth) { return static_cast<double>((1u << bit_depth) - 1u); }

void check_bit_depth(int bit_depth) {
  require(bit_depth == 8 || bit_depth == 10, ErrorKind::kInvalidArgument,
          "unsupported bit depth " + std::to_string(bit_depth));
}

}  // namespace

LumaFrame::LumaFrame(int width, int height, int bit_depth, std::vector<double> samples)
    : width_(width), height_(height), bit_depth_(bit_depth), samples_(std::move(samples)) {
  require(width > 0 && height > 0, ErrorKind::kInvalidArgument, "frame dimensions must be positive");
  check_bit_depth(bit_depth);
  require(samples_.size() == static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
          ErrorKind::kInvalidArgument, "sample count does not match frame dimensions");
  for (double v : samples_) {
    // NaN fails both comparisons.
    require(v >= 0.0 && v <= 1.0, ErrorKind::kInvalidArgument, "frame sample outside [0,1]");
  }
}

LumaFrame LumaFrame::filled(int width, int height, double value, int bit_depth) {
  require(width > 0 && height > 0, ErrorKind::kInvalidArgument, "frame dimensions must be positive");
  return LumaFrame(width, height, bit_depth,
                   std::vector<double>(static_cast<std::size_t>(width) * height, value));
}

std::uint16_t to_code(double sample, int bit_depth) {
  const double scaled = std::round(sample * max_code(bit_depth));
  return static_cast<std::uint16_t>(std::clamp(scaled, 0.0, max_code(bit_depth)));
}

CodePlaneSource::CodePlaneSource(FrameFormat format, std::vector<std::vector<std::uint16_t>> planes)
    : format_(format), planes_(std::move(planes)) {
  check_bit_depth(format.bit_depth);
  const auto n = static_cast<std::size_t>(format.width) * format.height;
  const auto limit = static_cast<std::uint16_t>(max_code(format.bit_depth));
  for (const auto& plane : planes_) {
    require(plane.size() == n, ErrorKind::kInvalidArgument, "code plane size mismatch");
    for (auto c : plane) {
      require(c <= limit, ErrorKind::kInvalidArgument, "code value exceeds bit depth");
    }
  }
}

LumaFrame CodePlaneSource::frame(std::size_t index) const {
  const auto& plane = planes_.at(index);
  const double top = max_code(format_.bit_depth);
  std::vector<double> samples(plane.size());
  for (std::size_t i = 0; i < plane.size(); ++i) samples[i] = plane[i] / top;
  return LumaFrame(format_.width, format_.height, format_.bit_depth, std::move(samples));
}

MemoryFrameSource::MemoryFrameSource(std::vector<LumaFrame> frames) : frames_(std::move(frames)) {
  require(!frames_.empty(), ErrorKind::kInvalidArgument, "clip must contain at least one frame");
  const auto& first = frames_.front();
  format_ = {first.width(), first.height(), first.bit_depth()};
  for (const auto& f : frames_) {
    require(f.width() == format_.width && f.height() == format_.height &&
                f.bit_depth() == format_.bit_depth,
            ErrorKind::kInvalidArgument, "all frames of a clip must share one format");
  }
}

Clip::Clip(std::shared_ptr<const FrameSource> source, std::optional<double> fps)
    : source_(std::move(source)), fps_(fps) {
  require(source_ != nullptr, ErrorKind::kInvalidArgument, "null frame source");
  require(source_->frame_count() >= 1, ErrorKind::kInvalidArgument,
          "clip must contain at least one frame");
}

Clip Clip::from_frames(std::vector<LumaFrame> frames) {
  return Clip(std::make_shared<MemoryFrameSource>(std::move(frames)));
}

LumaFrame Clip::frame(std::size_t index) const {
  require(index < frame_count(), ErrorKind::kInvalidArgument,
          "frame index " + std::to_string(index) + " out of range");
  return source_->frame(index);
}

Clip Clip::preloaded() const {
  if (dynamic_cast<const MemoryFrameSource*>(source_.get()) != nullptr ||
      dynamic_cast<const CodePlaneSource*>(source_.get()) != nullptr) {
    return *this;
  }
  const auto fmt = format();
  std::vector<std::vector<std::uint16_t>> planes;
  planes.reserve(frame_count());
  for (std::size_t i = 0; i < frame_count(); ++i) {
    const auto f = source_->frame(i);
    std::vector<std::uint16_t> codes(f.samples().size());
    for (std::size_t k = 0; k < codes.size(); ++k) codes[k] = to_code(f.samples()[k], fmt.bit_depth);
    planes.push_back(std::move(codes));
  }
  return Clip(std::make_shared<CodePlaneSource>(fmt, std::move(planes)), fps_);
}

}  // namespace xgc
