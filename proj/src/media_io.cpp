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

#include "xgc/media_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include "xgc/error.hpp"

namespace xgc {

namespace fs = std::filesystem;

namespace {

int bytes_per_sample(int bit_depth) { return bit_depth > 8 ? 2 : 1; }

void check_decoded_format(const FrameFormat& f) {
  require(f.width > 0 && f.height > 0, ErrorKind::kDecode, "zero dimensions");
  require(f.width >= kMinFrameSide && f.height >= kMinFrameSide, ErrorKind::kDecode,
          "frame smaller than " + std::to_string(kMinFrameSide) + "x" +
              std::to_string(kMinFrameSide));
  require(f.bit_depth == 8 || f.bit_depth == 10, ErrorKind::kDecode,
          "unsupported bit depth " + std::to_string(f.bit_depth));
}

std::vector<std::uint16_t> unpack_luma(const std::vector<unsigned char>& bytes, const FrameFormat& f) {
  const auto n = static_cast<std::size_t>(f.width) * f.height;
  std::vector<std::uint16_t> codes(n);
  if (f.bit_depth <= 8) {
    std::copy_n(bytes.begin(), n, codes.begin());
  } else {
    const auto limit = static_cast<std::uint16_t>((1u << f.bit_depth) - 1u);
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<std::uint16_t>(bytes[2 * i] | (bytes[2 * i + 1] << 8));
      require(v <= limit, ErrorKind::kDecode, "sample exceeds declared bit depth");
      codes[i] = v;
    }
  }
  return codes;
}

/// Planar frames at known byte offsets in a file; each access reopens the
/// file so concurrent readers never share a stream.
class PlanarFileSource final : public FrameSource {
 public:
  PlanarFileSource(fs::path path, FrameFormat format, std::vector<std::uintmax_t> offsets)
      : path_(std::move(path)), format_(format), offsets_(std::move(offsets)) {}

  FrameFormat format() const override { return format_; }
  std::size_t frame_count() const override { return offsets_.size(); }

  LumaFrame frame(std::size_t index) const override {
    std::ifstream in(path_, std::ios::binary);
    require(in.good(), ErrorKind::kDecode, "cannot open " + path_.string());
    const auto n = static_cast<std::size_t>(format_.width) * format_.height *
                   bytes_per_sample(format_.bit_depth);
    std::vector<unsigned char> bytes(n);
    in.seekg(static_cast<std::streamoff>(offsets_.at(index)));
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(n));
    require(in.gcount() == static_cast<std::streamsize>(n), ErrorKind::kDecode,
            "truncated frame payload in " + path_.string());
    const auto codes = unpack_luma(bytes, format_);
    const auto top = static_cast<double>((1u << format_.bit_depth) - 1u);
    std::vector<double> samples(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) samples[i] = codes[i] / top;
    return LumaFrame(format_.width, format_.height, format_.bit_depth, std::move(samples));
  }

 private:
  fs::path path_;
  FrameFormat format_;
  std::vector<std::uintmax_t> offsets_;
};

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_positive_int(std::string_view text, const std::string& what) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  require(ec == std::errc{} && ptr == end && v > 0, ErrorKind::kDecode, "malformed " + what);
  return v;
}

struct Y4mColorspace {
  ChromaLayout layout;
  int bit_depth;
};

Y4mColorspace parse_y4m_colorspace(const std::string& c) {
  static const std::array<std::pair<std::string_view, ChromaLayout>, 7> kBases = {{
      {"420jpeg", ChromaLayout::k420},
      {"420paldv", ChromaLayout::k420},
      {"420mpeg2", ChromaLayout::k420},
      {"420", ChromaLayout::k420},
      {"422", ChromaLayout::k422},
      {"444", ChromaLayout::k444},
      {"mono", ChromaLayout::kMono},
  }};
  for (const auto& [base, layout] : kBases) {
    if (c.rfind(base, 0) != 0) continue;
    const std::string_view rest = std::string_view(c).substr(base.size());
    if (rest.empty()) return {layout, 8};
    if (rest == "p10" || (layout == ChromaLayout::kMono && rest == "10")) return {layout, 10};
    fail(ErrorKind::kDecode, "unsupported bit depth in colorspace C" + c);
  }
  fail(ErrorKind::kDecode, "unsupported colorspace C" + c);
}

std::string read_line(std::istream& in, std::size_t limit) {
  std::string line;
  char ch = 0;
  while (in.get(ch)) {
    if (ch == '\n') return line;
    line.push_back(ch);
    require(line.size() <= limit, ErrorKind::kDecode, "header line too long");
  }
  fail(ErrorKind::kDecode, "unterminated header line");
}

double bt709_luma(double r, double g, double b) { return 0.2126 * r + 0.7152 * g + 0.0722 * b; }

/// Reads the next PNM header token, skipping whitespace and # comments.
std::string pnm_token(std::istream& in) {
  std::string tok;
  int ch = 0;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  return tok;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(trim(cur));
  return fields;
}

std::optional<int> optional_int(const std::vector<std::string>& f, std::size_t i, int line) {
  if (i >= f.size() || f[i].empty()) return std::nullopt;
  int v = 0;
  const auto* end = f[i].data() + f[i].size();
  const auto [ptr, ec] = std::from_chars(f[i].data(), end, v);
  require(ec == std::errc{} && ptr == end && v > 0, ErrorKind::kConfig,
          "manifest line " + std::to_string(line) + ": bad integer '" + f[i] + "'");
  return v;
}

}  // namespace

std::size_t planar_frame_bytes(int width, int height, int bit_depth, ChromaLayout layout) {
  const std::size_t w = static_cast<std::size_t>(width);
  const std::size_t h = static_cast<std::size_t>(height);
  const std::size_t cw = (w + 1) / 2;
  const std::size_t ch = (h + 1) / 2;
  std::size_t chroma = 0;
  switch (layout) {
    case ChromaLayout::k420: chroma = 2 * cw * ch; break;
    case ChromaLayout::k422: chroma = 2 * cw * h; break;
    case ChromaLayout::k444: chroma = 2 * w * h; break;
    case ChromaLayout::kMono: chroma = 0; break;
  }
  return (w * h + chroma) * static_cast<std::size_t>(bytes_per_sample(bit_depth));
}

Clip read_y4m(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::kDecode, "cannot open " + path.string());
  const std::string header = read_line(in, 4096);
  const auto tokens = split_ws(header);
  require(!tokens.empty() && tokens[0] == "YUV4MPEG2", ErrorKind::kDecode,
          "malformed header: missing YUV4MPEG2 signature");

  FrameFormat fmt{0, 0, 8};
  ChromaLayout layout = ChromaLayout::k420;
  std::optional<double> fps;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    const std::string_view value = std::string_view(t).substr(1);
    switch (t[0]) {
      case 'W': fmt.width = parse_positive_int(value, "width"); break;
      case 'H': fmt.height = parse_positive_int(value, "height"); break;
      case 'C': {
        const auto cs = parse_y4m_colorspace(std::string(value));
        layout = cs.layout;
        fmt.bit_depth = cs.bit_depth;
        break;
      }
      case 'F': {
        const auto colon = value.find(':');
        if (colon != std::string_view::npos) {
          const int num = parse_positive_int(value.substr(0, colon), "frame rate");
          const int den = parse_positive_int(value.substr(colon + 1), "frame rate");
          fps = static_cast<double>(num) / den;
        }
        break;
      }
      default: break;  // I, A, X carry nothing we need
    }
  }
  require(fmt.width > 0 && fmt.height > 0, ErrorKind::kDecode, "malformed header: missing W/H");
  check_decoded_format(fmt);

  const auto file_size = fs::file_size(path);
  const auto payload = planar_frame_bytes(fmt.width, fmt.height, fmt.bit_depth, layout);
  std::vector<std::uintmax_t> offsets;
  while (true) {
    const auto marker_pos = static_cast<std::uintmax_t>(in.tellg());
    if (marker_pos >= file_size) break;
    std::array<char, 5> magic{};
    in.read(magic.data(), magic.size());
    require(in.gcount() == 5 && std::string_view(magic.data(), 5) == "FRAME", ErrorKind::kDecode,
            "malformed frame marker at byte " + std::to_string(marker_pos));
    read_line(in, 4096);
    const auto data_pos = static_cast<std::uintmax_t>(in.tellg());
    require(data_pos + payload <= file_size, ErrorKind::kDecode,
            "truncated frame payload (frame " + std::to_string(offsets.size()) + ")");
    offsets.push_back(data_pos);
    in.seekg(static_cast<std::streamoff>(data_pos + payload));
  }
  require(!offsets.empty(), ErrorKind::kDecode, "no frames in " + path.string());
  return Clip(std::make_shared<PlanarFileSource>(path, fmt, std::move(offsets)), fps);
}

void write_y4m(const fs::path& path, const Clip& clip, ChromaLayout layout, int fps_num,
               int fps_den) {
  const auto fmt = clip.format();
  std::string cs;
  switch (layout) {
    case ChromaLayout::k420: cs = "420jpeg"; break;
    case ChromaLayout::k422: cs = "422"; break;
    case ChromaLayout::k444: cs = "444"; break;
    case ChromaLayout::kMono: cs = "mono"; break;
  }
  if (fmt.bit_depth == 10) cs = (layout == ChromaLayout::k420 ? "420" : cs) + "p10";
  if (fmt.bit_depth == 10 && layout == ChromaLayout::kMono) cs = "mono10";

  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::kIo, "cannot write " + path.string());
  out << "YUV4MPEG2 W" << fmt.width << " H" << fmt.height << " F" << fps_num << ':' << fps_den
      << " Ip A1:1 C" << cs << '\n';

  const std::size_t bps = static_cast<std::size_t>(bytes_per_sample(fmt.bit_depth));
  const std::size_t luma_bytes = static_cast<std::size_t>(fmt.width) * fmt.height * bps;
  const std::size_t chroma_bytes =
      planar_frame_bytes(fmt.width, fmt.height, fmt.bit_depth, layout) - luma_bytes;
  std::vector<unsigned char> chroma(chroma_bytes);
  const std::uint16_t mid = static_cast<std::uint16_t>(1u << (fmt.bit_depth - 1));
  for (std::size_t i = 0; i < chroma_bytes / bps; ++i) {
    if (bps == 1) {
      chroma[i] = static_cast<unsigned char>(mid);
    } else {
      chroma[2 * i] = static_cast<unsigned char>(mid & 0xff);
      chroma[2 * i + 1] = static_cast<unsigned char>(mid >> 8);
    }
  }

  std::vector<unsigned char> luma(luma_bytes);
  for (std::size_t k = 0; k < clip.frame_count(); ++k) {
    const auto f = clip.frame(k);
    const auto s = f.samples();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto code = to_code(s[i], fmt.bit_depth);
      if (bps == 1) {
        luma[i] = static_cast<unsigned char>(code);
      } else {
        luma[2 * i] = static_cast<unsigned char>(code & 0xff);
        luma[2 * i + 1] = static_cast<unsigned char>(code >> 8);
      }
    }
    out << "FRAME\n";
    out.write(reinterpret_cast<const char*>(luma.data()), static_cast<std::streamsize>(luma.size()));
    out.write(reinterpret_cast<const char*>(chroma.data()),
              static_cast<std::streamsize>(chroma.size()));
  }
  require(out.good(), ErrorKind::kIo, "write failed for " + path.string());
}

Clip read_raw_yuv(const fs::path& path, int width, int height, int bit_depth, ChromaLayout layout) {
  require(width > 0 && height > 0, ErrorKind::kDecode, "zero dimensions");
  const FrameFormat fmt{width, height, bit_depth};
  check_decoded_format(fmt);
  require(fs::exists(path), ErrorKind::kDecode, "cannot open " + path.string());
  const auto file_size = fs::file_size(path);
  const auto frame_bytes = planar_frame_bytes(width, height, bit_depth, layout);
  require(file_size > 0 && file_size % frame_bytes == 0, ErrorKind::kDecode,
          "size mismatch: " + std::to_string(file_size) + " bytes is not a multiple of " +
              std::to_string(frame_bytes));
  std::vector<std::uintmax_t> offsets(file_size / frame_bytes);
  for (std::size_t i = 0; i < offsets.size(); ++i) offsets[i] = i * frame_bytes;
  return Clip(std::make_shared<PlanarFileSource>(path, fmt, std::move(offsets)));
}

LumaFrame read_pnm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::kDecode, "cannot open " + path.string());
  const std::string magic = pnm_token(in);
  require(magic == "P2" || magic == "P3" || magic == "P5" || magic == "P6", ErrorKind::kDecode,
          "unreadable image " + path.string());
  const bool ascii = magic == "P2" || magic == "P3";
  const bool color = magic == "P3" || magic == "P6";
  const int width = std::atoi(pnm_token(in).c_str());
  const int height = std::atoi(pnm_token(in).c_str());
  const int maxval = std::atoi(pnm_token(in).c_str());
  require(width > 0 && height > 0, ErrorKind::kDecode, "bad image dimensions in " + path.string());
  require(maxval > 0 && maxval <= 1023, ErrorKind::kDecode,
          "unsupported maxval in " + path.string());
  const int bit_depth = maxval <= 255 ? 8 : 10;
  const int channels = color ? 3 : 1;
  const std::size_t count = static_cast<std::size_t>(width) * height * channels;

  std::vector<int> raw(count);
  if (ascii) {
    for (auto& v : raw) {
      const auto tok = pnm_token(in);
      require(!tok.empty(), ErrorKind::kDecode, "truncated image " + path.string());
      v = std::atoi(tok.c_str());
    }
  } else {
    const int bps = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> bytes(count * bps);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    require(in.gcount() == static_cast<std::streamsize>(bytes.size()), ErrorKind::kDecode,
            "truncated image " + path.string());
    for (std::size_t i = 0; i < count; ++i) {
      raw[i] = bps == 1 ? bytes[i] : (bytes[2 * i] << 8) | bytes[2 * i + 1];
    }
  }

  std::vector<double> samples(static_cast<std::size_t>(width) * height);
  const auto top = static_cast<double>(maxval);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double v = 0.0;
    if (color) {
      v = bt709_luma(raw[3 * i] / top, raw[3 * i + 1] / top, raw[3 * i + 2] / top);
    } else {
      v = raw[i] / top;
    }
    samples[i] = std::clamp(v, 0.0, 1.0);
  }
  return LumaFrame(width, height, bit_depth, std::move(samples));
}

void write_pgm(const fs::path& path, const LumaFrame& frame) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::kIo, "cannot write " + path.string());
  const int maxval = frame.bit_depth() == 8 ? 255 : 1023;
  out << "P5\n" << frame.width() << ' ' << frame.height() << '\n' << maxval << '\n';
  for (double s : frame.samples()) {
    const auto code = to_code(s, frame.bit_depth());
    if (maxval <= 255) {
      out.put(static_cast<char>(code));
    } else {
      out.put(static_cast<char>(code >> 8));
      out.put(static_cast<char>(code & 0xff));
    }
  }
}

Clip read_image_sequence(const fs::path& dir) {
  require(fs::is_directory(dir), ErrorKind::kDecode, "not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto ext = e.path().extension().string();
    if (e.is_regular_file() && (ext == ".pgm" || ext == ".ppm" || ext == ".pnm")) {
      files.push_back(e.path());
    }
  }
  require(!files.empty(), ErrorKind::kDecode, "no images in " + dir.string());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  std::vector<LumaFrame> frames;
  frames.reserve(files.size());
  for (const auto& f : files) {
    frames.push_back(read_pnm(f));
    const auto& last = frames.back();
    check_decoded_format({last.width(), last.height(), last.bit_depth()});
    require(last.width() == frames.front().width() && last.height() == frames.front().height() &&
                last.bit_depth() == frames.front().bit_depth(),
            ErrorKind::kDecode, "mixed dimensions in image sequence at " + f.filename().string());
  }
  return Clip(std::make_shared<MemoryFrameSource>(std::move(frames)));
}

std::string to_string(InputKind kind) {
  switch (kind) {
    case InputKind::kY4m: return "y4m";
    case InputKind::kRawYuv: return "raw_yuv";
    case InputKind::kImageSequence: return "image_seq";
    case InputKind::kScoresFile: return "scores_file";
  }
  return "unknown";
}

std::optional<InputKind> parse_input_kind(const std::string& text) {
  if (text == "y4m") return InputKind::kY4m;
  if (text == "raw_yuv") return InputKind::kRawYuv;
  if (text == "image_seq") return InputKind::kImageSequence;
  if (text == "scores_file") return InputKind::kScoresFile;
  return std::nullopt;
}

std::optional<ChromaLayout> parse_chroma(const std::string& text) {
  if (text == "420") return ChromaLayout::k420;
  if (text == "422") return ChromaLayout::k422;
  if (text == "444") return ChromaLayout::k444;
  if (text == "mono" || text == "400") return ChromaLayout::kMono;
  return std::nullopt;
}

std::vector<std::string> DatasetManifest::missing_mos() const {
  std::vector<std::string> ids;
  for (const auto& e : entries) {
    if (!e.mos) ids.push_back(e.clip_id);
  }
  return ids;
}

DatasetManifest load_manifest(const fs::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::kConfig, "cannot open manifest " + path.string());
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorKind::kConfig, "empty manifest");
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv(line);
  const std::vector<std::string> required = {"clip_id", "path", "kind", "mos"};
  const std::vector<std::string> optional = {"width", "height", "bit_depth", "chroma"};
  require(header.size() >= required.size() && header.size() <= required.size() + optional.size() &&
              std::equal(required.begin(), required.end(), header.begin()),
          ErrorKind::kConfig, "manifest header must start with clip_id,path,kind,mos");
  for (std::size_t i = required.size(); i < header.size(); ++i) {
    require(header[i] == optional[i - required.size()], ErrorKind::kConfig,
            "unexpected manifest column '" + header[i] + "'");
  }

  DatasetManifest manifest;
  manifest.source = path;
  const auto base = path.parent_path();
  std::set<std::string> seen;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto f = split_csv(line);
    const auto where = "manifest line " + std::to_string(line_no);
    require(f.size() <= header.size(), ErrorKind::kConfig,
            where + ": too many fields (paths containing commas are not supported)");
    require(f.size() >= required.size(), ErrorKind::kConfig, where + ": too few fields");

    ManifestEntry e;
    e.clip_id = f[0];
    require(!e.clip_id.empty(), ErrorKind::kConfig, where + ": empty clip_id");
    require(seen.insert(e.clip_id).second, ErrorKind::kConfig,
            where + ": duplicate clip_id '" + e.clip_id + "'");
    require(!f[1].empty(), ErrorKind::kConfig, where + ": empty path");
    e.path = fs::path(f[1]).is_absolute() ? fs::path(f[1]) : base / f[1];
    const auto kind = parse_input_kind(f[2]);
    require(kind.has_value(), ErrorKind::kConfig, where + ": unknown kind '" + f[2] + "'");
    e.kind = *kind;
    if (!f[3].empty()) {
      double mos = 0.0;
      const auto* end = f[3].data() + f[3].size();
      const auto [ptr, ec] = std::from_chars(f[3].data(), end, mos);
      require(ec == std::errc{} && ptr == end && std::isfinite(mos), ErrorKind::kConfig,
              where + ": unparsable mos '" + f[3] + "'");
      e.mos = mos;
    }
    e.width = optional_int(f, 4, line_no);
    e.height = optional_int(f, 5, line_no);
    e.bit_depth = optional_int(f, 6, line_no);
    if (f.size() > 7 && !f[7].empty()) {
      const auto chroma = parse_chroma(f[7]);
      require(chroma.has_value(), ErrorKind::kConfig, where + ": unknown chroma '" + f[7] + "'");
      e.chroma = *chroma;
    }
    if (e.kind == InputKind::kRawYuv) {
      require(e.width && e.height, ErrorKind::kConfig, where + ": raw_yuv needs width and height");
    }
    manifest.entries.push_back(std::move(e));
  }
  return manifest;
}

Clip open_entry(const ManifestEntry& entry) {
  switch (entry.kind) {
    case InputKind::kY4m: return read_y4m(entry.path);
    case InputKind::kRawYuv:
      return read_raw_yuv(entry.path, entry.width.value_or(0), entry.height.value_or(0),
                          entry.bit_depth.value_or(8), entry.chroma);
    case InputKind::kImageSequence: return read_image_sequence(entry.path);
    case InputKind::kScoresFile: break;
  }
  fail(ErrorKind::kInvalidArgument, "entry '" + entry.clip_id + "' does not reference a clip");
}

double read_scores_file(const fs::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::kDecode, "cannot open scores file " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream is(text);
  double sum = 0.0;
  std::size_t n = 0;
  std::string tok;
  while (is >> tok) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    require(end != tok.c_str() && *end == '\0' && std::isfinite(v), ErrorKind::kDecode,
            "bad number '" + tok + "' in " + path.string());
    sum += v;
    ++n;
  }
  require(n > 0, ErrorKind::kDecode, "empty scores file " + path.string());
  return sum / static_cast<double>(n);
}

}  // namespace xgc
