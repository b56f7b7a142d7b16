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

#include "xgc/spatial.hpp"

#include <cmath>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "xgc/error.hpp"
#include "xgc/util.hpp"

namespace xgc {

namespace {

// Absorbs representation error in x * h / 8 so exact products such as
// 0.1 * 80 / 8 are not pushed across an integer.
constexpr double kIndexSlack = 1e-9;

}  // namespace

CropRect central_crop_rect(int h, int w, double x) {
  require(std::isfinite(x) && x >= 0.0 && x <= 1.0, ErrorKind::kInvalidArgument,
          "crop confidence must lie in [0,1]");
  require(h >= 8 && w >= 8, ErrorKind::kInvalidArgument, "crop needs a frame of at least 8x8");
  const auto start = [&](int extent) {
    return static_cast<int>(std::floor(x * extent / 8.0 + kIndexSlack));
  };
  const auto end = [&](int extent) {
    return static_cast<int>(std::ceil((8.0 - x) * extent / 8.0 - kIndexSlack));
  };
  return {start(h), end(h), start(w), end(w)};
}

CropRect full_rect(int h, int w) { return {0, h, 0, w}; }

LumaFrame apply_crop(const LumaFrame& frame, const CropRect& rect) {
  require(rect.row_start >= 0 && rect.row_start < rect.row_end && rect.row_end <= frame.height() &&
              rect.col_start >= 0 && rect.col_start < rect.col_end &&
              rect.col_end <= frame.width(),
          ErrorKind::kInvalidArgument, "crop rectangle outside frame bounds");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(rect.height()) * rect.width());
  for (int r = rect.row_start; r < rect.row_end; ++r) {
    const auto row = frame.row(r);
    out.insert(out.end(), row.begin() + rect.col_start, row.begin() + rect.col_end);
  }
  return LumaFrame(rect.width(), rect.height(), frame.bit_depth(), std::move(out));
}

void FragmentConfig::validate() const {
  require(grid_size >= 1 && patch_size >= 1, ErrorKind::kConfig,
          "grid_size and patch_size must be positive");
}

std::pair<int, int> cell_span(int extent, int grid, int index) {
  const int cell = extent / grid;
  const int begin = index * cell;
  const int end = index == grid - 1 ? extent : begin + cell;
  return {begin, end};
}

FragmentImage fragment_sample(const LumaFrame& frame, const FragmentConfig& cfg) {
  cfg.validate();
  const int side = cfg.output_side();
  require(frame.width() >= side && frame.height() >= side, ErrorKind::kInvalidArgument,
          "frame too small for fragment sampling: need " + std::to_string(side) + "x" +
              std::to_string(side) + ", got " + std::to_string(frame.width()) + "x" +
              std::to_string(frame.height()));

  std::vector<double> out(static_cast<std::size_t>(side) * side);
  FragmentImage result;
  result.cells.reserve(static_cast<std::size_t>(cfg.grid_size) * cfg.grid_size);
  for (int gr = 0; gr < cfg.grid_size; ++gr) {
    const auto [row_begin, row_end] = cell_span(frame.height(), cfg.grid_size, gr);
    for (int gc = 0; gc < cfg.grid_size; ++gc) {
      const auto [col_begin, col_end] = cell_span(frame.width(), cfg.grid_size, gc);
      std::mt19937_64 rng(mix64(cfg.seed ^ mix64((static_cast<std::uint64_t>(gr) << 32) |
                                                 static_cast<std::uint32_t>(gc))));
      std::uniform_int_distribution<int> row_pick(0, row_end - row_begin - cfg.patch_size);
      std::uniform_int_distribution<int> col_pick(0, col_end - col_begin - cfg.patch_size);
      FragmentCell cell{gr, gc, row_begin + row_pick(rng), col_begin + col_pick(rng)};
      for (int r = 0; r < cfg.patch_size; ++r) {
        const auto src = frame.row(cell.src_row + r).subspan(static_cast<std::size_t>(cell.src_col),
                                                             static_cast<std::size_t>(cfg.patch_size));
        std::copy(src.begin(), src.end(),
                  out.begin() + static_cast<std::ptrdiff_t>(gr * cfg.patch_size + r) * side +
                      gc * cfg.patch_size);
      }
      result.cells.push_back(cell);
    }
  }
  result.image = LumaFrame(side, side, frame.bit_depth(), std::move(out));
  return result;
}

nlohmann::json to_json(const CropRect& rect) {
  return {{"row_start", rect.row_start},
          {"row_end", rect.row_end},
          {"col_start", rect.col_start},
          {"col_end", rect.col_end}};
}

nlohmann::json to_json(const FragmentConfig& cfg, const std::vector<FragmentCell>& cells) {
  nlohmann::json offsets = nlohmann::json::array();
  for (const auto& c : cells) {
    offsets.push_back({{"cell_row", c.cell_row},
                       {"cell_col", c.cell_col},
                       {"src_row", c.src_row},
                       {"src_col", c.src_col}});
  }
  return {{"grid_size", cfg.grid_size},
          {"patch_size", cfg.patch_size},
          {"seed", cfg.seed},
          {"offsets", offsets}};
}

}  // namespace xgc
