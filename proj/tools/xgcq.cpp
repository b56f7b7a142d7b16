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

// xgcq: command-line front end for the quality pipeline.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "xgc/benchmark.hpp"
#include "xgc/brisque.hpp"
#include "xgc/calibrate.hpp"
#include "xgc/classify.hpp"
#include "xgc/config.hpp"
#include "xgc/error.hpp"
#include "xgc/fixtures.hpp"
#include "xgc/media_io.hpp"
#include "xgc/pipeline.hpp"
#include "xgc/spatial.hpp"
#include "xgc/temporal.hpp"
#include "xgc/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace xgc;

namespace {

constexpr int kExitOther = 1;
constexpr int kExitDecode = 2;
constexpr int kExitConfig = 3;
constexpr int kExitModel = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDecode: return kExitDecode;
    case ErrorKind::kConfig: return kExitConfig;
    case ErrorKind::kModel: return kExitModel;
    default: return kExitOther;
  }
}

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  std::string output;
  std::string model;
  bool omit_timing = false;

  // Classifier and pipeline overrides.
  std::optional<double> alpha;
  std::optional<double> threshold;
  std::optional<std::size_t> budget;
  bool invert_quality = false;
  bool reverse_density = false;
  bool disable_spatial = false;
  bool disable_temporal = false;
};

struct InputOptions {
  std::string path;
  std::string kind = "auto";
  int width = 0;
  int height = 0;
  int bit_depth = 8;
  std::string chroma = "420";
};

PipelineConfig resolve_config(const GlobalOptions& g) {
  PipelineConfig cfg;
  if (!g.config_path.empty()) apply_config_file(g.config_path, cfg);
  if (const char* env = std::getenv("XGC_MODEL"); env != nullptr && *env != '\0') {
    cfg.model_path = env;
  }
  if (!g.model.empty()) cfg.model_path = g.model;
  if (g.seed) {
    cfg.seed = *g.seed;
    cfg.fragment.seed = *g.seed;
  }
  if (g.jobs) cfg.jobs = *g.jobs;
  if (!g.output.empty()) cfg.output_path = g.output;
  if (g.alpha) cfg.classifier.alpha = *g.alpha;
  if (g.threshold) cfg.classifier.pgc_ogc_threshold = *g.threshold;
  if (g.budget) cfg.temporal_budget = *g.budget;
  if (g.invert_quality) cfg.classifier.invert_quality = true;
  if (g.reverse_density) cfg.orientation = DensityOrientation::kReversed;
  if (g.disable_spatial) cfg.ablation.disable_spatial = true;
  if (g.disable_temporal) cfg.ablation.disable_temporal = true;
  cfg.validate();
  return cfg;
}

std::optional<brisque::SvrModel> load_optional_model(const PipelineConfig& cfg) {
  if (!cfg.model_path) return std::nullopt;
  return brisque::load_model(*cfg.model_path);
}

brisque::SvrModel require_model(const PipelineConfig& cfg) {
  require(cfg.model_path.has_value(), ErrorKind::kModel,
          "no model: pass --model, set XGC_MODEL or [model] path");
  return brisque::load_model(*cfg.model_path);
}

Clip open_input(const InputOptions& in) {
  const fs::path path(in.path);
  std::string kind = in.kind;
  if (kind == "auto") {
    if (fs::is_directory(path)) {
      kind = "images";
    } else if (path.extension() == ".yuv") {
      kind = "raw";
    } else {
      kind = "y4m";
    }
  }
  if (kind == "y4m") return read_y4m(path);
  if (kind == "images") return read_image_sequence(path);
  if (kind == "raw") {
    const auto layout = parse_chroma(in.chroma);
    require(layout.has_value(), ErrorKind::kConfig, "unknown chroma layout " + in.chroma);
    require(in.width > 0 && in.height > 0, ErrorKind::kConfig,
            "raw input needs --width and --height");
    return read_raw_yuv(path, in.width, in.height, in.bit_depth, *layout);
  }
  fail(ErrorKind::kConfig, "unknown input kind " + in.kind);
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "Y4M file, raw .yuv file or image directory")->required();
  cmd->add_option("--kind", in.kind, "auto | y4m | raw | images")->capture_default_str();
  cmd->add_option("--width", in.width, "raw input width");
  cmd->add_option("--height", in.height, "raw input height");
  cmd->add_option("--bit-depth", in.bit_depth, "raw input bit depth")->capture_default_str();
  cmd->add_option("--chroma", in.chroma, "raw input chroma: 420 | 422 | 444 | mono")
      ->capture_default_str();
}

void emit(const PipelineConfig& cfg, const std::string& text) {
  if (cfg.output_path) {
    write_file_atomic(*cfg.output_path, text);
  } else {
    std::cout << text << std::flush;
  }
}

void emit_json(const PipelineConfig& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

// ---------------------------------------------------------------------------

void cmd_classify(const GlobalOptions& g, const InputOptions& in) {
  const auto cfg = resolve_config(g);
  const auto clip = open_input(in);
  const double lambda = hardware_lambda(clip, cfg.classifier);
  std::optional<BrisquePredictor> predictor;
  if (lambda > 1.0) predictor.emplace(require_model(cfg));
  const auto c = confidence(clip, cfg.classifier, predictor ? &*predictor : nullptr);
  emit_json(cfg, to_json(c));
}

void cmd_score(const GlobalOptions& g, const InputOptions& in) {
  const auto cfg = resolve_config(g);
  const BrisquePredictor predictor(require_model(cfg));
  const auto clip = open_input(in);
  const auto id = fs::path(in.path).filename().replace_extension().string();
  const auto s = score_clip_pipeline(clip, cfg, predictor, id);
  emit_json(cfg, to_json(s, !g.omit_timing));
}

struct SampleOptions {
  bool temporal = false;
  std::optional<double> x;
  std::optional<std::size_t> frames;
};

void cmd_sample(const GlobalOptions& g, const InputOptions& in, const SampleOptions& so) {
  const auto cfg = resolve_config(g);
  std::optional<Clip> clip;
  if (!in.path.empty() && !(so.temporal && so.frames && so.x)) clip = open_input(in);

  double x = 0.0;
  if (so.x) {
    require(*so.x >= 0.0 && *so.x <= 1.0, ErrorKind::kConfig, "--x must lie in [0,1]");
    x = *so.x;
  } else {
    require(clip.has_value(), ErrorKind::kConfig, "sample needs an input or --x");
    const double lambda = hardware_lambda(*clip, cfg.classifier);
    std::optional<BrisquePredictor> predictor;
    if (lambda > 1.0) predictor.emplace(require_model(cfg));
    x = confidence(*clip, cfg.classifier, predictor ? &*predictor : nullptr).x;
  }

  if (so.temporal) {
    const std::size_t n = so.frames ? *so.frames : clip->frame_count();
    const auto plan = cfg.ablation.disable_temporal
                          ? sample_frames_uniform(n, cfg.temporal_budget)
                          : sample_frames(n, cfg.temporal_budget, x, cfg.orientation);
    auto j = to_json(plan);
    j["x"] = x;
    emit_json(cfg, j);
    return;
  }

  require(clip.has_value(), ErrorKind::kConfig, "spatial sampling needs an input");
  const auto rect = cfg.ablation.disable_spatial ? full_rect(clip->height(), clip->width())
                                                 : central_crop_rect(clip->height(), clip->width(), x);
  const auto frame = apply_crop(clip->frame(0), rect);
  const auto fragments = fragment_sample(frame, cfg.fragment);
  emit_json(cfg, {{"x", x}, {"crop", to_json(rect)}, {"fragments", to_json(cfg.fragment, fragments.cells)}});
}

void cmd_features(const GlobalOptions& g, const InputOptions& in,
                  const std::vector<std::size_t>& frames) {
  const auto cfg = resolve_config(g);
  const auto clip = open_input(in);
  std::vector<std::size_t> wanted = frames.empty() ? std::vector<std::size_t>{0} : frames;
  json out = json::array();
  for (auto f : wanted) {
    require(f < clip.frame_count(), ErrorKind::kConfig, "frame index out of range");
    const auto feats = brisque::features(clip.frame(f));
    out.push_back({{"frame", f}, {"features", feats.values}});
  }
  emit_json(cfg, {{"width", clip.width()}, {"height", clip.height()}, {"frames", out}});
}

struct CalibrateOptions {
  std::string manifest;
  std::optional<std::size_t> segments;
  std::optional<std::size_t> stride;
  std::string train_model;
};

void cmd_calibrate(const GlobalOptions& g, const CalibrateOptions& co) {
  auto cfg = resolve_config(g);
  if (co.segments) cfg.calibrate_segments = *co.segments;
  if (co.stride) cfg.calibrate_stride = *co.stride;
  cfg.validate();

  const auto manifest = load_manifest(co.manifest);
  std::vector<const ManifestEntry*> entries;
  for (const auto& e : manifest.entries) {
    if (e.mos && e.kind != InputKind::kScoresFile) entries.push_back(&e);
  }
  std::vector<Clip> clips;
  for (const auto* e : entries) clips.push_back(open_entry(*e));
  require(clips.size() >= kMinCalibrationClips, ErrorKind::kConfig,
          "calibration needs at least " + std::to_string(kMinCalibrationClips) +
              " clips with mos");
  std::size_t min_frames = clips.front().frame_count();
  for (const auto& c : clips) min_frames = std::min(min_frames, c.frame_count());
  require(cfg.calibrate_segments <= min_frames, ErrorKind::kConfig,
          "n_segments (" + std::to_string(cfg.calibrate_segments) +
              ") exceeds the shortest clip (" + std::to_string(min_frames) + " frames)");

  std::vector<double> mos;
  for (const auto* e : entries) mos.push_back(*e->mos);

  std::optional<brisque::SvrModel> model = load_optional_model(cfg);
  if (!model) {
    // Fit a ridge model on every stride-th frame against the clip MOS.
    const double hi = *std::max_element(mos.begin(), mos.end());
    const double lo = *std::min_element(mos.begin(), mos.end());
    std::vector<std::vector<brisque::BrisqueFeatures>> per_clip(clips.size());
    parallel_for(clips.size(), cfg.jobs, [&](std::size_t i) {
      for (std::size_t f = 0; f < clips[i].frame_count(); f += cfg.calibrate_stride) {
        per_clip[i].push_back(brisque::features(clips[i].frame(f)));
      }
    });
    std::vector<brisque::BrisqueFeatures> x;
    std::vector<double> y;
    for (std::size_t i = 0; i < clips.size(); ++i) {
      const double t = hi > lo ? 100.0 * (hi - mos[i]) / (hi - lo) : 50.0;
      const double target = cfg.higher_is_better ? 100.0 - t : t;
      for (const auto& f : per_clip[i]) {
        x.push_back(f);
        y.push_back(target);
      }
    }
    model = train_fallback_regressor(x, y);
    if (!co.train_model.empty()) brisque::save_model(co.train_model, *model);
  }
  const BrisquePredictor predictor(*model);

  std::vector<SegmentSeries> series(clips.size());
  parallel_for(clips.size(), cfg.jobs, [&](std::size_t i) {
    series[i] = segment_scores(clips[i], cfg.calibrate_segments, predictor, cfg.calibrate_stride,
                               entries[i]->clip_id);
    // Weights expect higher-is-better segment quality.
    if (!cfg.higher_is_better) {
      for (double& v : series[i].scores) v = -v;
    }
  });
  emit_json(cfg, to_json(estimate_weights(series, mos)));
}

struct EvaluateOptions {
  std::vector<std::string> manifests;
  std::string ablation;
  std::optional<std::size_t> repeats;
  std::string csv;
  bool plcc_logistic = false;
  bool higher_is_better = false;
};

void cmd_evaluate(const GlobalOptions& g, const EvaluateOptions& eo) {
  auto cfg = resolve_config(g);
  if (eo.repeats) cfg.repeats = *eo.repeats;
  if (eo.plcc_logistic) cfg.plcc_logistic = true;
  if (eo.higher_is_better) cfg.higher_is_better = true;
  cfg.validate();

  std::vector<AblationRow> rows;
  if (eo.ablation.empty()) {
    rows.push_back(row_for(cfg.ablation));
  } else if (eo.ablation == "table") {
    rows.assign(std::begin(kAllAblationRows), std::end(kAllAblationRows));
  } else {
    const auto row = parse_ablation_row(eo.ablation);
    require(row.has_value(), ErrorKind::kConfig, "unknown ablation " + eo.ablation);
    rows.push_back(*row);
  }
  const auto model = load_optional_model(cfg);

  std::vector<EvaluationReport> all;
  for (const auto& path : eo.manifests) {
    auto reports = run_benchmark(load_manifest(path), cfg, model, rows);
    all.insert(all.end(), reports.begin(), reports.end());
  }

  const bool timing = !g.omit_timing;
  json out;
  if (all.size() == 1) {
    out = to_json(all.front(), timing);
  } else {
    out["reports"] = json::array();
    for (const auto& r : all) out["reports"].push_back(to_json(r, timing));
    if (eo.manifests.size() > 1) {
      json medians;
      for (auto row : rows) {
        std::vector<EvaluationReport> same;
        for (const auto& r : all) {
          if (r.ablation == row) same.push_back(r);
        }
        medians[to_string(row)] = to_json(median_over_datasets(same));
      }
      out["median_over_datasets"] = medians;
    }
  }
  if (!eo.csv.empty()) write_file_atomic(eo.csv, to_csv(all, timing));
  emit_json(cfg, out);
}

struct FixtureOptions {
  std::string kind;
  std::string out;
  std::size_t count = 20;
  std::optional<std::size_t> frames;
  double value = 0.0;
};

void cmd_fixtures(const GlobalOptions& g, const FixtureOptions& fo) {
  const auto cfg = resolve_config(g);
  const fs::path out(fo.out);
  json summary{{"kind", fo.kind}, {"seed", cfg.seed}};
  if (fo.kind == "quality") {
    fixtures::QualityLayout layout;
    if (fo.frames) layout.frames = *fo.frames;
    summary["manifest"] = fixtures::write_quality_dataset(out, fo.count, cfg.seed, layout).string();
  } else if (fo.kind == "separation") {
    fs::create_directories(out);
    std::string manifest = "clip_id,path,kind,mos\n";
    for (int high = 0; high < 2; ++high) {
      for (std::size_t i = 0; i < fo.count; ++i) {
        const auto id = std::string(high ? "high" : "low") + "_" + std::to_string(i);
        const auto clip = fixtures::separation_clip(high == 1, i, cfg.seed, fo.frames.value_or(3));
        write_y4m(out / (id + ".y4m"), clip, ChromaLayout::kMono);
        manifest += id + "," + id + ".y4m,y4m,\n";
      }
    }
    write_file_atomic(out / "manifest.csv", manifest);
    summary["manifest"] = (out / "manifest.csv").string();
  } else if (fo.kind == "latency") {
    fs::create_directories(out.parent_path().empty() ? fs::path(".") : out.parent_path());
    write_y4m(out, fixtures::latency_clip(cfg.seed, fo.frames.value_or(150)), ChromaLayout::kMono);
    summary["clip"] = out.string();
  } else if (fo.kind == "constant-model") {
    brisque::save_model(out, fixtures::constant_model(fo.value));
    summary["model"] = out.string();
  } else if (fo.kind == "rbf-model") {
    brisque::save_model(out, fixtures::synthetic_rbf_model(cfg.seed));
    summary["model"] = out.string();
  } else {
    fail(ErrorKind::kConfig, "unknown fixture kind " + fo.kind);
  }
  std::cout << summary.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"No-reference video quality pipeline"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--config", g.config_path, "INI configuration file");
  app.add_option("--seed", g.seed, "seed for fragment offsets and data splits");
  app.add_option("--jobs", g.jobs, "worker threads");
  app.add_option("--output", g.output, "write the result here instead of standard output");
  app.add_option("--model", g.model, "model file (overrides XGC_MODEL and the config file)");
  app.add_flag("--omit-timing", g.omit_timing, "leave wall-clock fields out of the output");
  app.add_option("--alpha", g.alpha, "classifier alpha");
  app.add_option("--pgc-ogc-threshold", g.threshold, "confidence separating PGC from OGC");
  app.add_option("--budget", g.budget, "frames sampled per clip");
  app.add_flag("--invert-quality", g.invert_quality, "use 100 - q in the quality branch");
  app.add_flag("--reverse-density", g.reverse_density, "mirror the temporal density");
  app.add_flag("--disable-spatial", g.disable_spatial, "skip the central crop");
  app.add_flag("--disable-temporal", g.disable_temporal, "sample frames uniformly");

  InputOptions classify_in, score_in, sample_in, features_in;
  auto* classify = app.add_subcommand("classify", "print the content classification");
  add_input_options(classify, classify_in);

  auto* score = app.add_subcommand("score", "score one clip through the full pipeline");
  add_input_options(score, score_in);

  SampleOptions sample_opts;
  auto* sample = app.add_subcommand("sample", "print the crop and fragment offsets or the frame plan");
  sample->add_option("input", sample_in.path, "input clip");
  sample->add_option("--kind", sample_in.kind, "auto | y4m | raw | images");
  sample->add_option("--width", sample_in.width, "raw input width");
  sample->add_option("--height", sample_in.height, "raw input height");
  sample->add_option("--bit-depth", sample_in.bit_depth, "raw input bit depth");
  sample->add_option("--chroma", sample_in.chroma, "raw input chroma");
  sample->add_flag("--temporal", sample_opts.temporal, "print the frame plan");
  sample->add_option("--x", sample_opts.x, "confidence to use instead of classifying");
  sample->add_option("--frames", sample_opts.frames, "frame count when no input is given");

  std::vector<std::size_t> feature_frames;
  auto* features = app.add_subcommand("features", "print BRISQUE features of frames");
  add_input_options(features, features_in);
  features->add_option("--frame", feature_frames, "frame indices (default 0)");

  CalibrateOptions cal;
  auto* calibrate = app.add_subcommand("calibrate", "estimate segment weights from a dataset");
  calibrate->add_option("manifest", cal.manifest, "dataset manifest CSV")->required();
  calibrate->add_option("--segments", cal.segments, "number of segments");
  calibrate->add_option("--stride", cal.stride, "frame stride inside segments");
  calibrate->add_option("--train-model", cal.train_model,
                        "save the ridge model fitted when no model is given");

  EvaluateOptions ev;
  auto* evaluate = app.add_subcommand("evaluate", "benchmark against subjective scores");
  evaluate->add_option("manifest", ev.manifests, "dataset manifest CSV files")->required();
  evaluate->add_option("--ablation", ev.ablation, "none | spatial | temporal | all | table");
  evaluate->add_option("--repeats", ev.repeats, "random 80/20 splits");
  evaluate->add_option("--csv", ev.csv, "per-clip CSV export");
  evaluate->add_flag("--plcc-logistic", ev.plcc_logistic, "fit a logistic before PLCC");
  evaluate->add_flag("--higher-is-better", ev.higher_is_better,
                     "model output already follows the MOS direction");

  FixtureOptions fx;
  auto* fixture = app.add_subcommand("fixtures", "generate synthetic test data");
  fixture->add_option("--kind", fx.kind, "quality | separation | latency | constant-model | rbf-model")
      ->required();
  fixture->add_option("--out", fx.out, "output directory or file")->required();
  fixture->add_option("--count", fx.count, "clips per group")->capture_default_str();
  fixture->add_option("--frames", fx.frames, "frames per clip");
  fixture->add_option("--value", fx.value, "score of the constant model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*classify) cmd_classify(g, classify_in);
    if (*score) cmd_score(g, score_in);
    if (*sample) cmd_sample(g, sample_in, sample_opts);
    if (*features) cmd_features(g, features_in, feature_frames);
    if (*calibrate) cmd_calibrate(g, cal);
    if (*evaluate) cmd_evaluate(g, ev);
    if (*fixture) cmd_fixtures(g, fx);
  } catch (const Error& e) {
    std::cerr << "xgcq: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "xgcq: " << e.what() << "\n";
    return kExitOther;
  }
  return 0;
}
