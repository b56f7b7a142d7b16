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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "xgc/frame.hpp"

namespace xgc {

enum class ChromaLayout { k420, k422, k444, kMono };

/// Bytes of one planar frame (Y then Cb, Cr) for the given layout.
std::size_t planar_frame_bytes(int width, int height, int bit_depth, ChromaLayout layout);

/// Opens a YUV4MPEG2 file. Frames are decoded lazily from disk; only the
/// luma plane is kept.
Clip read_y4m(const std::filesystem::path& path);

/// Writes the clip as YUV4MPEG2 with neutral chroma.
void write_y4m(const std::filesystem::path& path, const Clip& clip,
               ChromaLayout layout = ChromaLayout::k420, int fps_num = 30, int fps_den = 1);

/// Headerless planar YUV, Y plane first, little-endian 16-bit words when
/// bit_depth > 8.
Clip read_raw_yuv(const std::filesystem::path& path, int width, int height, int bit_depth,
                  ChromaLayout layout);

/// Every .pgm/.ppm/.pnm file in `dir`, in lexicographic filename order.
/// Colour input is reduced to luma with BT.709 weights.
Clip read_image_sequence(const std::filesystem::path& dir);

LumaFrame read_pnm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const LumaFrame& frame);

enum class InputKind { kY4m, kRawYuv, kImageSequence, kScoresFile };

struct ManifestEntry {
  std::string clip_id;
  std::filesystem::path path;  // resolved against the manifest's directory
  InputKind kind = InputKind::kY4m;
  std::optional<double> mos;
  std::optional<int> width;
  std::optional<int> height;
  std::optional<int> bit_depth;
  ChromaLayout chroma = ChromaLayout::k420;
};

struct DatasetManifest {
  std::filesystem::path source;
  std::vector<ManifestEntry> entries;

  /// Ids of rows whose mos column was empty.
  std::vector<std::string> missing_mos() const;
};

/// CSV with header clip_id,path,kind,mos[,width,height,bit_depth[,chroma]].
DatasetManifest load_manifest(const std::filesystem::path& path);

/// Decodes a clip-bearing entry (anything but kScoresFile).
Clip open_entry(const ManifestEntry& entry);

/// Mean of the whitespace/comma separated numbers in a scores file.
double read_scores_file(const std::filesystem::path& path);

std::string to_string(InputKind kind);
std::optional<InputKind> parse_input_kind(const std::string& text);
std::optional<ChromaLayout> parse_chroma(const std::string& text);

}  // namespace xgc
