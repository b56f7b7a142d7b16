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

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "xgc/frame.hpp"

namespace xgc {

/// Half-open pixel rectangle.
struct CropRect {
  int row_start = 0;
  int row_end = 0;
  int col_start = 0;
  int col_end = 0;

  int height() const noexcept { return row_end - row_start; }
  int width() const noexcept { return col_end - col_start; }
  friend bool operator==(const CropRect&, const CropRect&) = default;
};

/// Central crop keeping rows [x h / 8, (8 - x) h / 8) and likewise for
/// columns; starts round down and ends round up.
CropRect central_crop_rect(int h, int w, double x);

CropRect full_rect(int h, int w);

LumaFrame apply_crop(const LumaFrame& frame, const CropRect& rect);

struct FragmentConfig {
  int grid_size = 7;
  int patch_size = 32;
  std::uint64_t seed = 0;

  void validate() const;
  int output_side() const noexcept { return grid_size * patch_size; }
};

struct FragmentCell {
  int cell_row = 0;
  int cell_col = 0;
  int src_row = 0;  // top-left of the sampled patch in the input frame
  int src_col = 0;
};

struct FragmentImage {
  LumaFrame image;
  std::vector<FragmentCell> cells;  // grid order, row-major
};

/// [start, end) of cell `index` when `extent` pixels are split into `grid`
/// cells; the last cell takes the remainder.
std::pair<int, int> cell_span(int extent, int grid, int index);

/// One patch per grid cell at a seeded random in-cell offset, tiled into a
/// (grid * patch)^2 image. Offsets depend only on (seed, cell row, cell col).
FragmentImage fragment_sample(const LumaFrame& frame, const FragmentConfig& cfg);

nlohmann::json to_json(const CropRect& rect);
nlohmann::json to_json(const FragmentConfig& cfg, const std::vector<FragmentCell>& cells);

}  // namespace xgc
